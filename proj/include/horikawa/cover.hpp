#pragma once

// Numerical invariants of surfaces and of double covers of Hirzebruch surfaces.

#include <optional>
#include <string>

#include "horikawa/checked.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/lattice.hpp"

namespace horikawa {

/// (p_g, q, chi(O), K^2, e). Any field may be unknown.
struct SurfaceInvariants {
  std::optional<integer> p_g;
  std::optional<integer> q;
  std::optional<integer> chi;
  std::optional<integer> K2;
  std::optional<integer> e;

  /// chi = 1 - q + p_g, when all three are known.
  bool chi_consistent() const { return !(p_g && q && chi) || *chi == 1 - *q + *p_g; }
  /// 12 chi = K^2 + e, when all three are known.
  bool noether_formula_holds() const { return !(chi && K2 && e) || 12 * *chi == *K2 + *e; }

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// Invariants of a (blown-up) Hirzebruch surface: rational, so p_g = q = 0.
inline SurfaceInvariants rational_surface_invariants(const BlownHirzebruch& s) {
  const integer k2 = 8 - s.blowup_count();
  return SurfaceInvariants{0, 0, 1, k2, 12 - k2};
}

struct H0Result {
  integer value = 0;
  bool negative_section_multiple = false;
};

/// h^0(F_n, a C0 + b f) = sum_{k=0}^{a} max(0, b - k n + 1).
inline H0Result h0_hirzebruch(integer n, integer a, integer b) {
  if (n < 0) throw precondition_error("Hirzebruch index must be non-negative");
  if (a < 0) return {0, true};
  integer total = 0;
  for (integer k = 0; k <= a; ++k) {
    const integer term = checked::add(checked::sub(b, checked::mul(k, n)), 1);
    if (term > 0) total = checked::add(total, term);
  }
  return {total, false};
}

/// Double cover of `base` branched along a member of |2 L|.
struct CoverSpec {
  BlownHirzebruch base;
  SurfaceInvariants base_invariants;
  DivisorClass half_class;
  static constexpr int degree = 2;

  DivisorClass branch_class() const { return 2 * half_class; }
};

/// Standard double-cover formulas:
///   chi = 2 chi(base) + (L.K + L.L)/2,   K^2 = 2 (K + L)^2,
///   p_g = p_g(base) + h^0(K + L)  (only when the base is F_n itself).
/// q follows from chi = 1 - q + p_g and e from Noether's formula.
inline SurfaceInvariants double_cover_invariants(const CoverSpec& cover) {
  const auto& s = cover.base;
  const auto& base = cover.base_invariants;
  if (!s.contains(cover.half_class)) throw precondition_error("half class is not in the base lattice");
  if (!base.chi) throw precondition_error("base chi(O) is required");

  const DivisorClass k = canonical_class(s);
  const DivisorClass adjoint = k + cover.half_class;
  const integer twice_extra = checked::add(pairing(s, cover.half_class, k), pairing(s, cover.half_class, cover.half_class));
  if (twice_extra % 2 != 0)
    throw precondition_error("inconsistent branch data: chi of the double cover is not an integer");

  SurfaceInvariants out;
  out.chi = checked::add(checked::mul(2, *base.chi), twice_extra / 2);
  out.K2 = checked::mul(2, pairing(s, adjoint, adjoint));
  out.e = checked::sub(checked::mul(12, *out.chi), *out.K2);
  if (s.blowup_count() == 0 && base.p_g) {
    const auto h0 = h0_hirzebruch(s.hirzebruch_index(), adjoint.section(), adjoint.fiber());
    out.p_g = checked::add(*base.p_g, h0.value);
    out.q = checked::add(checked::sub(1, *out.chi), *out.p_g);
  }
  return out;
}

struct H1Vanishing {
  integer margin = 0;  ///< deg K_D - D^2 = D.K
  bool vanishes = false;
};

/// Degree criterion for H^1(O(D)) = 0 on a surface with p_g = q = 0,
/// assuming D is an irreducible nonsingular curve (not checked).
inline H1Vanishing h1_vanishing_by_degree(const BlownHirzebruch& s, const DivisorClass& d) {
  const integer margin = checked::sub(adjunction_degree(s, d), pairing(s, d, d));
  return {margin, margin < 0};
}

struct NoetherCheck {
  integer margin = 0;  ///< K^2 - (2 p_g - 4)
  bool satisfied = false;
  bool on_line = false;
};

inline NoetherCheck noether_check(const SurfaceInvariants& inv) {
  if (!inv.p_g || !inv.K2) throw precondition_error("Noether check needs p_g and K^2");
  const integer margin = checked::sub(*inv.K2, checked::sub(checked::mul(2, *inv.p_g), 4));
  return {margin, margin >= 0, margin == 0};
}

struct TangencyCount {
  integer conditions = 0;
  integer h0 = 0;
  integer margin = 0;
};

/// Conditions imposed on |4(C0 + n f)| by the local shapes (y-x)(y+x) at p and
/// (y - x^{n-4})(y + x^{n-4}) at q: 3 + 3(n-4).
inline TangencyCount tangency_condition_count(integer n) {
  if (n < 5) throw precondition_error("tangency count needs n >= 5");
  TangencyCount t;
  t.conditions = checked::add(checked::mul(3, n - 4), 3);
  t.h0 = h0_hirzebruch(n, 4, checked::mul(4, n)).value;
  t.margin = t.h0 - t.conditions;
  return t;
}

}  // namespace horikawa
