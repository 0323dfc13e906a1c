#include <gtest/gtest.h>

#include "horikawa/pipeline.hpp"

using namespace horikawa;

TEST(Configuration, ChainShape) {
  const auto cfg8 = build_en_configuration(8);
  std::vector<integer> self;
  for (const auto& c : cfg8.chain()) self.push_back(pairing(cfg8.surface, c, c));
  EXPECT_EQ(self, (std::vector<integer>{-8, -2, -2, -2, -2}));

  const auto cfg5 = build_en_configuration(5);
  EXPECT_EQ(cfg5.surface.rank(), 4u);
  self.clear();
  for (const auto& c : cfg5.chain()) self.push_back(pairing(cfg5.surface, c, c));
  EXPECT_EQ(self, (std::vector<integer>{-5, -2}));
  EXPECT_EQ(pairing(cfg5.surface, cfg5.E1, cfg5.f0), 1);
  EXPECT_EQ(pairing(cfg5.surface, cfg5.E2, cfg5.f0), 1);

  EXPECT_THROW(build_en_configuration(4), precondition_error);
}

TEST(Configuration, InvariantsForAllN) {
  for (integer n = 5; n <= 20; ++n) {
    const auto cfg = build_en_configuration(n);
    const auto& s = cfg.surface;
    EXPECT_EQ(cfg.u(n - 3), cfg.pullC0);
    EXPECT_EQ(cfg.u(n - 4), cfg.f0);
    EXPECT_EQ(pairing(s, cfg.f0, cfg.f0), -2);
    for (integer i = 1; i <= n - 5; ++i) EXPECT_EQ(pairing(s, cfg.u(i), cfg.u(i)), -2);
    for (integer i = 1; i < n - 3; ++i) EXPECT_EQ(pairing(s, cfg.u(i), cfg.u(i + 1)), 1);
    EXPECT_EQ(pairing(s, cfg.E1, cfg.f0), 1);
    EXPECT_EQ(pairing(s, cfg.E2, cfg.u(1)), 1);
    for (integer i = 1; i <= n - 3; ++i) EXPECT_EQ(pairing(s, cfg.Delta, cfg.u(i)), 0);
    EXPECT_EQ(pairing(s, cfg.Delta, cfg.E1), 2);
    EXPECT_EQ(pairing(s, cfg.Delta, cfg.E2), 2);
    EXPECT_EQ(cfg.canonical_from_curves() - cfg.pullK, cfg.K - cfg.pullK);
    EXPECT_EQ(cfg.delta_from_curves(), cfg.Delta);
    EXPECT_TRUE(negativity_check(s, cfg.chain()).negative_definite);
  }
}

TEST(Configuration, LatticeLSquared) {
  // L = 5 C0 + (5n+1) f - 2 e1 - 2 e2 - 3 (e3 + ... + e_{n-3}); L^2 = 16 n + 47.
  for (integer n = 5; n <= 20; ++n) {
    const auto cfg = build_en_configuration(n);
    EXPECT_EQ(pairing(cfg.surface, cfg.L, cfg.L), 16 * n + 47);
  }
  const auto cfg5 = build_en_configuration(5);
  EXPECT_EQ(pairing(cfg5.surface, cfg5.L, cfg5.L), 127);
}

TEST(Report, FrozenValues) {
  const auto r5 = en_report(5);
  EXPECT_EQ(std::get<integer>(r5.find("delta^2")->computed), 72);
  EXPECT_EQ(std::get<integer>(r5.find("deg_K_delta")->computed), 48);
  EXPECT_EQ(std::get<integer>(r5.find("h0(D)")->computed), 55);
  EXPECT_EQ(std::get<integer>(*r5.quantity("L^2")), 127);
  EXPECT_TRUE(r5.verdict());
  EXPECT_TRUE(r5.all_pass());

  const auto r6 = en_report(6);
  EXPECT_EQ(std::get<integer>(r6.find("delta^2")->computed), 84);
  EXPECT_EQ(std::get<integer>(r6.find("deg_K_delta")->computed), 58);
}

TEST(Report, AllIdentitiesPassAndLSquaredFlagged) {
  for (integer n = 5; n <= 20; ++n) {
    const auto r = en_report(n);
    for (const auto& id : r.identities) EXPECT_TRUE(id.pass) << n << ": " << id.name;
    EXPECT_TRUE(r.verdict());
    const integer l2 = std::get<integer>(*r.quantity("L^2"));
    const integer closed = std::get<integer>(*r.quantity("L^2_closed_form"));
    EXPECT_EQ(closed, 25 * n + 2);
    const bool flagged = std::any_of(r.flags.begin(), r.flags.end(), [](const Flag& f) { return f.name == "L^2_discrepancy"; });
    EXPECT_EQ(flagged, l2 != closed) << n;
    EXPECT_EQ(std::get<integer>(r.find("h1_margin(delta)")->computed),
              std::get<integer>(r.find("h1_margin_equals_delta.K")->expected));
  }
}

TEST(Horikawa, Direct) {
  EXPECT_EQ(pg_q_chi_k2(horikawa_direct(5)), (std::vector<integer>{4, 0, 5, 4}));
  EXPECT_EQ(pg_q_chi_k2(horikawa_direct(4)), (std::vector<integer>{3, 0, 4, 2}));
  for (integer n = 4; n <= 20; ++n) EXPECT_EQ(*horikawa_direct(n).chi, n);
  EXPECT_THROW(horikawa_direct(3), precondition_error);
}

TEST(Horikawa, BlowdownComparison) {
  const auto c5 = compare_blowdown_vs_horikawa(5);
  EXPECT_TRUE(c5.match);
  EXPECT_EQ(chi_k2_e(c5.smoothed.invariants), (std::vector<integer>{5, 4, 56}));
  EXPECT_EQ(chi_k2_e(c5.direct), (std::vector<integer>{5, 4, 56}));
  EXPECT_EQ(*compare_blowdown_vs_horikawa(8).smoothed.invariants.K2, 10);
  EXPECT_EQ(*compare_blowdown_vs_horikawa(8).direct.K2, 10);
  for (integer n = 5; n <= 20; ++n) {
    const auto c = compare_blowdown_vs_horikawa(n);
    EXPECT_TRUE(c.match);
    EXPECT_TRUE(c.noether.on_line);
  }
}

TEST(W4, OneAndTwo) {
  const auto one = w4_example(1);
  EXPECT_TRUE(one.verdict());
  EXPECT_EQ(std::get<integer>(one.find("smoothed.noether_margin")->computed), -1);
  EXPECT_EQ(std::get<bool>(one.find("noether_violated")->computed), true);

  const auto two = w4_example(2);
  EXPECT_TRUE(two.verdict());
  EXPECT_EQ(std::get<std::vector<integer>>(two.find("smoothed.chi_K2_e")->computed), (std::vector<integer>{4, 2, 46}));
  EXPECT_TRUE(two.find("smoothed_matches_H(4)")->pass);
  EXPECT_EQ(std::get<integer>(two.find("h1_margin(D)")->computed), -24);
  EXPECT_EQ(std::get<integer>(two.find("D.C0")->computed), 0);

  EXPECT_THROW(w4_example(3), precondition_error);
}

TEST(SingleContraction, NoetherViolated) {
  EXPECT_EQ(std::get<integer>(single_contraction_report(5).find("smoothed.noether_margin")->computed), -2);
  EXPECT_EQ(std::get<integer>(single_contraction_report(6).find("smoothed.noether_margin")->computed), -3);
  EXPECT_EQ(std::get<integer>(single_contraction_report(4).find("smoothed.noether_margin")->computed), -1);
  for (integer n = 5; n <= 20; ++n) {
    const auto r = single_contraction_report(n);
    EXPECT_TRUE(r.all_pass()) << n;
    EXPECT_EQ(std::get<integer>(r.find("smoothed.noether_margin")->computed), 3 - n);
  }
  EXPECT_THROW(single_contraction_report(3), precondition_error);
}
