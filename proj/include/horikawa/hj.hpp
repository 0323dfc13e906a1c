#pragma once

// Hirzebruch-Jung continued fractions and class-T chains.
//
// A chain [b_1, ..., b_r] (all b_i >= 2) resolves the cyclic quotient
// 1/m(1,q) with m/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)).
//
// Non-RDP class-T chains are generated from the seeds [4] and [3,2,...,2,3]
// by the two expansion rules
//   [b_1..b_r] -> [2, b_1, .., b_{r-1}, b_r + 1]
//   [b_1..b_r] -> [b_1 + 1, b_2, .., b_r, 2]
// Recognition runs those rules backwards.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "horikawa/checked.hpp"
#include "horikawa/errors.hpp"

namespace horikawa {

struct CyclicQuotient {
  integer m = 2;
  integer q = 1;

  CyclicQuotient() = default;
  CyclicQuotient(integer order, integer weight) : m(order), q(weight) {
    if (m < 2) throw precondition_error("cyclic quotient order must be at least 2");
    if (q < 1 || q >= m) throw precondition_error("cyclic quotient weight must satisfy 1 <= q < m");
    if (std::gcd(m, q) != 1) throw precondition_error("cyclic quotient requires gcd(m, q) = 1");
  }

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;
};

class ResolutionChain {
 public:
  ResolutionChain() = default;
  explicit ResolutionChain(std::vector<integer> entries) : b_(std::move(entries)) { validate(); }
  ResolutionChain(std::initializer_list<integer> entries) : b_(entries) { validate(); }

  const std::vector<integer>& entries() const { return b_; }
  std::size_t length() const { return b_.size(); }
  integer operator[](std::size_t i) const { return b_.at(i); }
  integer front() const { return b_.front(); }
  integer back() const { return b_.back(); }

  ResolutionChain reversed() const { return ResolutionChain(std::vector<integer>(b_.rbegin(), b_.rend())); }
  bool all_twos() const {
    return std::all_of(b_.begin(), b_.end(), [](integer b) { return b == 2; });
  }

  friend bool operator==(const ResolutionChain&, const ResolutionChain&) = default;
  friend auto operator<=>(const ResolutionChain&, const ResolutionChain&) = default;

 private:
  void validate() const {
    if (b_.empty()) throw precondition_error("resolution chain must be non-empty");
    for (integer b : b_)
      if (b < 2) throw precondition_error("resolution chain entries must be at least 2");
  }

  std::vector<integer> b_;
};

inline std::string to_string(const ResolutionChain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

/// Class-T parameters: the chain resolves 1/(d n^2)(1, d n a - 1).
struct TData {
  integer d = 1;
  integer n = 2;
  integer a = 1;

  integer smoothing_dimension() const { return d; }
  friend bool operator==(const TData&, const TData&) = default;
};

inline CyclicQuotient hj_value(const ResolutionChain& c) {
  // Evaluate from the tail: p/r = b_i - r'/p' with (p', r') the tail value.
  integer p = c.back();
  integer r = 1;
  for (std::size_t i = c.length() - 1; i-- > 0;) {
    const integer np = checked::sub(checked::mul(c[i], p), r);
    r = p;
    p = np;
  }
  return CyclicQuotient(p, r);
}

inline ResolutionChain hj_expand(const CyclicQuotient& x) {
  std::vector<integer> b;
  integer m = x.m;
  integer q = x.q;
  // m/q = b - 1/(q/(b q - m)), b = ceil(m/q).
  while (q > 0) {
    const integer b_i = (m + q - 1) / q;
    b.push_back(b_i);
    const integer rest = b_i * q - m;
    m = q;
    q = rest;
  }
  return ResolutionChain(std::move(b));
}

inline std::pair<ResolutionChain, ResolutionChain> expand_t_chain(const ResolutionChain& c) {
  std::vector<integer> left{2};
  left.insert(left.end(), c.entries().begin(), c.entries().end());
  left.back() = checked::add(left.back(), 1);

  std::vector<integer> right = c.entries();
  right.front() = checked::add(right.front(), 1);
  right.push_back(2);
  return {ResolutionChain(std::move(left)), ResolutionChain(std::move(right))};
}

/// Seed [3, 2^(d-2), 3] for d >= 2, [4] for d = 1.
inline ResolutionChain class_t_seed(integer d) {
  if (d < 1) throw precondition_error("class-T seed width must be at least 1");
  if (d == 1) return ResolutionChain{4};
  std::vector<integer> b(static_cast<std::size_t>(d), 2);
  b.front() = 3;
  b.back() = 3;
  return ResolutionChain(std::move(b));
}

/// Seed width d if `c` is one of the seeds.
inline std::optional<integer> seed_width(const ResolutionChain& c) {
  if (c.length() == 1) return c[0] == 4 ? std::optional<integer>(1) : std::nullopt;
  if (c.front() != 3 || c.back() != 3) return std::nullopt;
  for (std::size_t i = 1; i + 1 < c.length(); ++i)
    if (c[i] != 2) return std::nullopt;
  return static_cast<integer>(c.length());
}

enum class ReductionStep {
  StripFront,  ///< drop a leading 2, decrement the last entry
  StripBack,   ///< drop a trailing 2, decrement the first entry
};

inline const char* to_string(ReductionStep s) {
  return s == ReductionStep::StripFront ? "strip-front" : "strip-back";
}

inline std::optional<ResolutionChain> reduce(const ResolutionChain& c, ReductionStep step) {
  if (c.length() < 2) return std::nullopt;
  std::vector<integer> b = c.entries();
  if (step == ReductionStep::StripFront) {
    if (b.front() != 2 || b.back() < 3) return std::nullopt;
    b.erase(b.begin());
    b.back() -= 1;
  } else {
    if (b.back() != 2 || b.front() < 3) return std::nullopt;
    b.pop_back();
    b.front() -= 1;
  }
  return ResolutionChain(std::move(b));
}

/// Inverse of `reduce`.
inline ResolutionChain unreduce(const ResolutionChain& c, ReductionStep step) {
  auto [left, right] = expand_t_chain(c);
  return step == ReductionStep::StripFront ? left : right;
}

struct RationalDoublePoint {
  std::size_t r = 0;  ///< A_r
  friend bool operator==(const RationalDoublePoint&, const RationalDoublePoint&) = default;
};
struct ClassT {
  TData data;
  friend bool operator==(const ClassT&, const ClassT&) = default;
};
struct NotClassT {
  friend bool operator==(const NotClassT&, const NotClassT&) = default;
};

using ChainKind = std::variant<RationalDoublePoint, ClassT, NotClassT>;

struct ChainClassification {
  ResolutionChain chain;
  ChainKind kind;
  /// Steps applied to `chain` to reach `seed`, in order. Replaying them
  /// backwards with `unreduce` from the seed gives `chain`.
  std::vector<ReductionStep> reduction_trace;
  std::optional<ResolutionChain> seed;

  bool is_class_t() const { return std::holds_alternative<ClassT>(kind); }
  bool is_rdp() const { return std::holds_alternative<RationalDoublePoint>(kind); }
  const TData& t_data() const { return std::get<ClassT>(kind).data; }
};

inline std::string kind_name(const ChainKind& k) {
  if (std::holds_alternative<RationalDoublePoint>(k)) return "rational-double-point";
  if (std::holds_alternative<ClassT>(k)) return "class-t";
  return "not-class-t";
}

/// Solve d n^2 = m, d n a - 1 = q with n >= 2, 1 <= a < n, gcd(a, n) = 1.
/// The solution is unique when it exists; uniqueness is verified.
inline std::optional<TData> solve_t_data(const CyclicQuotient& x) {
  std::optional<TData> found;
  for (integer n = 2; n * n <= x.m; ++n) {
    if (x.m % (n * n) != 0) continue;
    const integer d = x.m / (n * n);
    const integer dn = d * n;
    if ((x.q + 1) % dn != 0) continue;
    const integer a = (x.q + 1) / dn;
    if (a < 1 || a >= n || std::gcd(a, n) != 1) continue;
    if (found) throw internal_error("class-T parameters are not unique");
    found = TData{d, n, a};
  }
  return found;
}

namespace detail {

struct ReductionSearch {
  std::map<ResolutionChain, std::optional<std::pair<std::vector<ReductionStep>, ResolutionChain>>> memo;

  std::optional<std::pair<std::vector<ReductionStep>, ResolutionChain>> run(const ResolutionChain& c) {
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    std::optional<std::pair<std::vector<ReductionStep>, ResolutionChain>> result;
    if (seed_width(c)) {
      result = std::make_pair(std::vector<ReductionStep>{}, c);
    } else {
      for (ReductionStep step : {ReductionStep::StripFront, ReductionStep::StripBack}) {
        auto smaller = reduce(c, step);
        if (!smaller) continue;
        if (auto sub = run(*smaller)) {
          sub->first.insert(sub->first.begin(), step);
          result = std::move(sub);
          break;
        }
      }
    }
    memo.emplace(c, result);
    return result;
  }
};

}  // namespace detail

inline ChainClassification recognize_class_t(const ResolutionChain& c) {
  ChainClassification out{c, NotClassT{}, {}, std::nullopt};
  if (c.all_twos()) {
    out.kind = RationalDoublePoint{c.length()};
    return out;
  }
  detail::ReductionSearch search;
  auto path = search.run(c);
  if (!path) return out;

  const integer width = *seed_width(path->second);
  auto data = solve_t_data(hj_value(c));
  if (!data || data->d != width) throw internal_error("class-T chain " + to_string(c) + " has inconsistent parameters");
  out.kind = ClassT{*data};
  out.reduction_trace = std::move(path->first);
  out.seed = std::move(path->second);
  return out;
}

/// All non-RDP class-T chains of length <= max_length, level by level:
/// each level lists the expansions of the previous level, then the new seed.
inline std::vector<ResolutionChain> generate_class_t(std::size_t max_length) {
  if (max_length < 1) throw precondition_error("max_length must be at least 1");
  std::vector<ResolutionChain> out;
  std::set<ResolutionChain> seen;
  std::vector<ResolutionChain> level;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<ResolutionChain> next;
    auto add = [&](ResolutionChain c) {
      if (seen.insert(c).second) {
        out.push_back(c);
        next.push_back(std::move(c));
      }
    };
    for (const auto& c : level) {
      auto [left, right] = expand_t_chain(c);
      add(std::move(left));
      add(std::move(right));
    }
    if (len >= 2) add(class_t_seed(static_cast<integer>(len)));
    else add(class_t_seed(1));
    level = std::move(next);
  }
  return out;
}

}  // namespace horikawa
