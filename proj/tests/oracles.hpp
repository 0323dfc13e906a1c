#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it is used to check.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using rational = boost::multiprecision::cpp_rational;
using i64 = std::int64_t;

/// Gram matrix of F_n blown up k times, written out entry by entry.
inline std::vector<std::vector<i64>> hirzebruch_gram(i64 n, i64 k) {
  const auto r = static_cast<std::size_t>(k + 2);
  std::vector<std::vector<i64>> g(r, std::vector<i64>(r, 0));
  g[0][0] = -n;
  g[0][1] = g[1][0] = 1;
  for (std::size_t i = 2; i < r; ++i) g[i][i] = -1;
  return g;
}

/// x^T G y by plain matrix multiplication.
inline i64 quadratic(const std::vector<std::vector<i64>>& g, const std::vector<i64>& x, const std::vector<i64>& y) {
  i64 s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) s += x[i] * g[i][j] * y[j];
  return s;
}

/// Value of b_1 - 1/(b_2 - 1/(... - 1/b_r)) as an exact rational.
inline rational continued_fraction(const std::vector<i64>& b) {
  rational v = b.back();
  for (std::size_t i = b.size() - 1; i-- > 0;) v = rational(b[i]) - 1 / v;
  return v;
}

/// h^0(F_n, a C0 + b f) by counting monomials x^k y^j, 0 <= k <= a, 0 <= j <= b - k n.
inline i64 h0_monomials(i64 n, i64 a, i64 b) {
  i64 count = 0;
  for (i64 k = 0; k <= a; ++k)
    for (i64 j = 0; j <= b - k * n; ++j) ++count;
  return count;
}

/// h^0(F_n, k (C0 + n f)) through the exact sequences
///   0 -> O(j f) -> O((j+1) f) -> O_P1 -> 0,
///   0 -> O(n f) -> O(C) -> O_{C0}(C) = O_P1 -> 0,
///   0 -> O(j C) -> O((j+1) C) -> O_C((j+1) C) -> 0, C = P1 with C.C = n,
/// using that every h^1 on the left vanishes.
inline i64 h0_exact_sequences(i64 n, i64 k) {
  i64 h0_fiber_multiple = 1;  // h^0(O) = 1
  for (i64 j = 0; j < n; ++j) h0_fiber_multiple += 1;  // h^0(O_P1) = 1 each step
  if (k == 0) return 1;
  i64 h0 = h0_fiber_multiple + 1;  // C.C0 = 0, so O_{C0}(C) = O_P1
  for (i64 j = 1; j < k; ++j) h0 += (j + 1) * n + 1;  // deg O_C((j+1)C) = (j+1) n
  return h0;
}

/// Dense Gaussian elimination on the chain's tridiagonal system G d = -(b - 2).
inline std::vector<rational> chain_discrepancies(const std::vector<i64>& b) {
  const std::size_t r = b.size();
  std::vector<std::vector<rational>> a(r, std::vector<rational>(r + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    a[i][i] = -b[i];
    if (i + 1 < r) a[i][i + 1] = a[i + 1][i] = 1;
    a[i][r] = -(b[i] - 2);
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<rational> d(r);
  for (std::size_t i = 0; i < r; ++i) d[i] = a[i][r] / a[i][i];
  return d;
}

/// Every chain of length 1..max_len with entries in [2, max_entry].
template <typename F>
void for_each_chain(std::size_t max_len, i64 max_entry, F&& f) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<i64> b(len, 2);
    while (true) {
      f(b);
      std::size_t i = 0;
      while (i < len && b[i] == max_entry) b[i++] = 2;
      if (i == len) break;
      ++b[i];
    }
  }
}

}  // namespace oracle
