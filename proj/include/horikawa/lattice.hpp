#pragma once

// Picard lattices of Hirzebruch surfaces F_n blown up k times.
//
// Basis order is (C0, f, e_1, ..., e_k) with
//   C0.C0 = -n, C0.f = 1, f.f = 0, e_i.e_j = -delta_ij, e_i.C0 = e_i.f = 0.
// Blow-up centres are never recorded; a curve is whatever integer
// combination the caller designates.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "horikawa/checked.hpp"
#include "horikawa/errors.hpp"

namespace horikawa {

using big_integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<integer>>;

class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<integer> coefficients) : coeffs_(std::move(coefficients)) {}
  DivisorClass(std::initializer_list<integer> coefficients) : coeffs_(coefficients) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<integer>(rank, 0)); }

  std::size_t rank() const { return coeffs_.size(); }
  const std::vector<integer>& coefficients() const { return coeffs_; }
  integer operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Coefficient of C0.
  integer section() const { return coeffs_.at(0); }
  /// Coefficient of f.
  integer fiber() const { return coeffs_.at(1); }
  /// Coefficient of e_i, 1-based.
  integer exceptional(std::size_t i) const { return coeffs_.at(i + 1); }

  DivisorClass& operator+=(const DivisorClass& other) {
    require_same_rank(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], other.coeffs_[i]);
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& other) {
    require_same_rank(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], other.coeffs_[i]);
    return *this;
  }
  DivisorClass& operator*=(integer s) {
    for (auto& c : coeffs_) c = checked::mul(c, s);
    return *this;
  }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a) { return a *= -1; }
  friend DivisorClass operator*(integer s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator*(DivisorClass a, integer s) { return a *= s; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

 private:
  void require_same_rank(const DivisorClass& other) const {
    if (other.rank() != rank()) throw precondition_error("divisor classes of different rank");
  }

  std::vector<integer> coeffs_;
};

class BlownHirzebruch {
 public:
  BlownHirzebruch(integer hirzebruch_index, integer blowup_count)
      : n_(hirzebruch_index), k_(blowup_count) {
    if (n_ < 0) throw precondition_error("Hirzebruch index must be non-negative");
    if (k_ < 0) throw precondition_error("blow-up count must be non-negative");
  }

  integer hirzebruch_index() const { return n_; }
  integer blowup_count() const { return k_; }
  std::size_t rank() const { return static_cast<std::size_t>(k_) + 2; }

  DivisorClass zero() const { return DivisorClass::zero(rank()); }
  DivisorClass section() const { return unit(0); }
  DivisorClass fiber() const { return unit(1); }
  /// Exceptional class e_i, 1-based.
  DivisorClass exceptional(integer i) const {
    if (i < 1 || i > k_) throw precondition_error("exceptional index out of range");
    return unit(static_cast<std::size_t>(i) + 1);
  }
  /// a*C0 + b*f.
  DivisorClass make(integer a, integer b) const {
    auto d = zero();
    d += a * section();
    d += b * fiber();
    return d;
  }

  integer gram(std::size_t i, std::size_t j) const {
    if (i >= rank() || j >= rank()) throw precondition_error("basis index out of range");
    if (i == 0 && j == 0) return -n_;
    if ((i == 0 && j == 1) || (i == 1 && j == 0)) return 1;
    if (i >= 2 && i == j) return -1;
    return 0;
  }

  IntMatrix gram_matrix() const {
    IntMatrix g(rank(), std::vector<integer>(rank(), 0));
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) g[i][j] = gram(i, j);
    return g;
  }

  bool contains(const DivisorClass& d) const { return d.rank() == rank(); }

  friend bool operator==(const BlownHirzebruch&, const BlownHirzebruch&) = default;

 private:
  DivisorClass unit(std::size_t i) const {
    auto d = zero();
    std::vector<integer> c = d.coefficients();
    c[i] = 1;
    return DivisorClass(std::move(c));
  }

  integer n_;
  integer k_;
};

inline integer pairing(const BlownHirzebruch& s, const DivisorClass& a, const DivisorClass& b) {
  if (!s.contains(a) || !s.contains(b)) throw precondition_error("divisor class rank does not match surface");
  const integer n = s.hirzebruch_index();
  // (a0 C0 + a1 f).(b0 C0 + b1 f) = -n a0 b0 + a0 b1 + a1 b0
  integer r = checked::mul(checked::neg(n), checked::mul(a[0], b[0]));
  r = checked::add(r, checked::mul(a[0], b[1]));
  r = checked::add(r, checked::mul(a[1], b[0]));
  for (std::size_t i = 2; i < a.rank(); ++i) r = checked::sub(r, checked::mul(a[i], b[i]));
  return r;
}

inline integer self_intersection(const BlownHirzebruch& s, const DivisorClass& a) { return pairing(s, a, a); }

/// -2 C0 - (n+2) f + sum e_i.
inline DivisorClass canonical_class(const BlownHirzebruch& s) {
  auto k = s.make(-2, checked::neg(checked::add(s.hirzebruch_index(), 2)));
  for (integer i = 1; i <= s.blowup_count(); ++i) k += s.exceptional(i);
  return k;
}

inline BlownHirzebruch blow_up(const BlownHirzebruch& s) {
  return BlownHirzebruch(s.hirzebruch_index(), checked::add(s.blowup_count(), 1));
}

/// Pullback of a class on `from` to a later blow-up `to` (appends zero coefficients).
inline DivisorClass total_transform(const BlownHirzebruch& from, const BlownHirzebruch& to, const DivisorClass& d) {
  if (!from.contains(d)) throw precondition_error("divisor class rank does not match source surface");
  if (from.hirzebruch_index() != to.hirzebruch_index() || to.blowup_count() < from.blowup_count())
    throw precondition_error("target is not a blow-up of the source surface");
  std::vector<integer> c = d.coefficients();
  c.resize(to.rank(), 0);
  return DivisorClass(std::move(c));
}

/// C.(C + K); equals 2g - 2 for a reduced irreducible curve in class C.
inline integer adjunction_degree(const BlownHirzebruch& s, const DivisorClass& c) {
  return pairing(s, c, c + canonical_class(s));
}

/// Leading principal minors of an integer symmetric matrix, computed by
/// fraction-free (Bareiss) elimination. Entry i is the (i+1)x(i+1) minor.
inline std::vector<big_integer> leading_principal_minors(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<big_integer>> a(n, std::vector<big_integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw precondition_error("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  // Without pivoting, after step k the entry a[k][k] is the (k+1)-th leading minor
  // as long as earlier minors are non-zero. A zero minor stops the elimination;
  // later minors are then computed directly.
  std::vector<big_integer> minors;
  big_integer prev = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  for (std::size_t size = minors.size() + 1; size <= n; ++size) {
    // Fallback: rational elimination of the leading block.
    std::vector<std::vector<rational>> b(size, std::vector<rational>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) b[i][j] = m[i][j];
    rational det = 1;
    for (std::size_t c = 0; c < size; ++c) {
      std::size_t p = c;
      while (p < size && b[p][c] == 0) ++p;
      if (p == size) {
        det = 0;
        break;
      }
      if (p != c) {
        std::swap(b[p], b[c]);
        det = -det;
      }
      det *= b[c][c];
      for (std::size_t r = c + 1; r < size; ++r) {
        const rational factor = b[r][c] / b[c][c];
        for (std::size_t j = c; j < size; ++j) b[r][j] -= factor * b[c][j];
      }
    }
    minors.push_back(boost::multiprecision::numerator(det));
  }
  return minors;
}

inline big_integer determinant(const IntMatrix& m) {
  if (m.empty()) return 1;
  return leading_principal_minors(m).back();
}

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by exact symmetric (congruence) elimination.
inline Inertia inertia(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<rational>> a(n, std::vector<rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i).at(j);

  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][p] == 0) ++p;
      if (p < n) {
        std::swap(a[p], a[k]);
        for (auto& row : a) std::swap(row[p], row[k]);
      } else {
        p = k + 1;
        while (p < n && a[k][p] == 0) ++p;
        if (p == n) {
          ++result.zero;
          continue;
        }
        // Replace e_k by e_k + e_p: new diagonal is 2 a[k][p] != 0.
        for (std::size_t j = 0; j < n; ++j) a[k][j] += a[p][j];
        for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][p];
      }
    }
    const rational pivot = a[k][k];
    if (pivot > 0) ++result.positive;
    else ++result.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      const rational factor = a[i][k] / pivot;
      if (factor == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
  }
  return result;
}

struct NegativityResult {
  IntMatrix gram;
  std::vector<big_integer> minors;
  bool negative_definite = true;
  bool vacuous = false;
};

inline IntMatrix mutual_gram(const BlownHirzebruch& s, const std::vector<DivisorClass>& classes) {
  IntMatrix g(classes.size(), std::vector<integer>(classes.size(), 0));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i; j < classes.size(); ++j) g[i][j] = g[j][i] = pairing(s, classes[i], classes[j]);
  return g;
}

/// Mutual Gram matrix of `classes` and whether it is negative definite
/// (leading principal minors alternate in sign, starting negative).
inline NegativityResult negativity_check(const BlownHirzebruch& s, const std::vector<DivisorClass>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (classes[i] == classes[j]) throw precondition_error("classes must be pairwise distinct");

  NegativityResult r;
  if (classes.empty()) {
    r.vacuous = true;
    return r;
  }
  r.gram = mutual_gram(s, classes);
  r.minors = leading_principal_minors(r.gram);
  for (std::size_t i = 0; i < r.minors.size(); ++i) {
    const bool want_negative = (i % 2 == 0);
    if (want_negative ? r.minors[i] >= 0 : r.minors[i] <= 0) {
      r.negative_definite = false;
      break;
    }
  }
  return r;
}

}  // namespace horikawa
