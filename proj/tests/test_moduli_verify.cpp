#include "quotient_forge/moduli_verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace qforge;

namespace {

auto claim(const Report &r, const std::string &name) -> const Claim & {
  for (const auto &c : r.claims)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

} // namespace

TEST(Stability, CanonicalWeight) {
  EXPECT_EQ(canonical_weight(3).theta, (std::vector<std::int64_t>{-2, 1, 1}));
  EXPECT_EQ(canonical_weight(1).theta, (std::vector<std::int64_t>{0}));
}

TEST(Stability, RepresentationsOfSevenTwo) {
  auto sq = build_special_quiver({7, 2});
  auto theta = canonical_weight(3);
  QuiverRep w(8, Rational(0));
  EXPECT_EQ(is_theta_stable(w, theta, sq.quiver), Stability::Unstable);
  // supported on the tree {a1, a3}
  w[0] = 1;
  w[2] = Rational(3, 2);
  EXPECT_EQ(is_theta_stable(w, theta, sq.quiver), Stability::Stable);
  w[2] = 0;
  w[1] = 5;
  EXPECT_EQ(is_theta_stable(w, theta, sq.quiver), Stability::Unstable);
  EXPECT_THROW(is_theta_stable(w, canonical_weight(2), sq.quiver), RangeViolation);
}

TEST(Stability, ZeroWeightSubsetIsOnlySemistable) {
  LabelledQuiver q(2);
  q.add_arrow({0, 0, 1, x_pow(1), {}});
  Weight zero{{0, 0}};
  EXPECT_EQ(is_theta_stable({Rational(1)}, zero, q), Stability::SemistableOnly);
  auto res = semistable_equals_stable(q, zero);
  EXPECT_FALSE(res.equal);
}

TEST(Stability, SemistableEqualsStableSmallQuivers) {
  for (const auto &g : all_groups(30)) {
    auto sq = build_special_quiver(g);
    if (sq.ell() > 3) continue;
    auto res = semistable_equals_stable(sq.quiver, canonical_weight(sq.vertex_count()));
    EXPECT_TRUE(res.equal) << to_string(g);
    EXPECT_NE(res.method.find("exhaustive"), std::string::npos);
  }
}

TEST(Stability, LargeQuiversUseSubsetSums) {
  auto sq = build_special_quiver({21, 13});
  auto res = semistable_equals_stable(sq.quiver, canonical_weight(sq.vertex_count()));
  EXPECT_TRUE(res.equal);
  EXPECT_NE(res.method.find("weight 0"), std::string::npos);
}

TEST(Stability, StableIffSupportsSpanningTree) {
  for (const auto &g : all_groups(9)) {
    auto sq = build_special_quiver(g);
    if (sq.arrow_count() > 12) continue;
    EXPECT_TRUE(stability_tree_crosscheck(sq.quiver)) << to_string(g);
  }
}

TEST(ClosedImmersion, EveryChartAcrossSweep) {
  for (const auto &g : all_groups(30, 2)) {
    auto sq = build_special_quiver(g);
    for (int j = 0; j <= sq.ell(); ++j) {
      auto c = closed_immersion_chart_check(j, sq);
      EXPECT_TRUE(c.passed) << to_string(g) << " chart " << j << ": " << c.detail;
      EXPECT_EQ(c.paths.size(), static_cast<std::size_t>(sq.vertex_count()));
    }
  }
}

TEST(ChartElimination, SevenTwoOrder) {
  auto sq = build_special_quiver({7, 2});
  // chart 0: stage 2 only, vertex 2 then 1
  EXPECT_EQ(elimination_order(0, sq), (std::vector<int>{4, 6, 7, 2}));
  EXPECT_EQ(elimination_order(2, sq), (std::vector<int>{1, 3, 7, 6}));
}

TEST(ChartElimination, SevenTwoCharts) {
  auto sq = build_special_quiver({7, 2});
  auto J = relation_ideal(sq);
  for (int j = 0; j <= 2; ++j) {
    auto ce = chart_elimination(j, sq, J);
    EXPECT_TRUE(ce.passed()) << "chart " << j << ": " << ce.detail << ce.stall_state;
    EXPECT_EQ(ce.tree, expected_tree(j, 2));
    EXPECT_EQ(ce.free_pair, std::make_pair(2 * j, 2 * j + 1));
    ASSERT_TRUE(ce.groebner_agrees.has_value());
    EXPECT_TRUE(*ce.groebner_agrees);
    for (int v : ce.tree) EXPECT_EQ(format_laurent(ce.expression.at(v)), "y" + std::to_string(v + 1));
  }
}

TEST(ChartElimination, FreePairAcrossSweep) {
  ChartEliminationOptions fast{false};
  for (const auto &g : all_groups(30, 2)) {
    auto sq = build_special_quiver(g);
    auto J = relation_ideal(sq);
    for (int j = 0; j <= sq.ell(); ++j) {
      auto ce = chart_elimination(j, sq, J, fast);
      EXPECT_TRUE(ce.passed()) << to_string(g) << " chart " << j << ": " << ce.detail << ce.stall_state;
      EXPECT_EQ(ce.free_pair, std::make_pair(2 * j, 2 * j + 1));
      EXPECT_FALSE(ce.groebner_agrees.has_value());
    }
  }
}

TEST(ChartElimination, FormatLaurent) {
  EXPECT_EQ(format_laurent({0, 0}), "1");
  EXPECT_EQ(format_laurent({1, -2, 0, 3}), "y1*y2^-2*y4^3");
}

TEST(MainTheorem, WorkedExamples) {
  for (GroupType g : {GroupType{7, 2}, GroupType{21, 13}}) {
    auto rep = main_theorem_check(g);
    EXPECT_TRUE(rep.passed()) << to_string(g);
    EXPECT_EQ(rep.claims.size(), 4u);
    EXPECT_EQ(claim(rep, "saturation_equality").detail, "Groebner bases");
    EXPECT_EQ(claim(rep, "chart_elimination").children.size(), static_cast<std::size_t>(resolution_data(g).ell + 1));
  }
}

TEST(MainTheorem, LatticeRouteAgreesWithGroebnerRoute) {
  MainTheoremOptions lattice;
  lattice.groebner_saturation_max_arrows = 0;
  for (GroupType g : {GroupType{7, 2}, GroupType{11, 3}, GroupType{13, 5}}) {
    auto rep = main_theorem_check(g, lattice);
    EXPECT_TRUE(rep.passed()) << to_string(g);
    EXPECT_EQ(claim(rep, "saturation_equality").detail, "each chart substitution has kernel ker(pi)");
  }
}

TEST(MainTheorem, TrivialGroupIsVacuous) {
  auto rep = main_theorem_check({1, 0});
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(claim(rep, "chart_elimination").vacuous);
}

TEST(MainTheorem, SameKernel) {
  IntegerMatrix A{{1, -1, 0}}, B{{2, -2, 0}}, C{{1, 0, -1}};
  EXPECT_TRUE(same_kernel(A, B));
  EXPECT_FALSE(same_kernel(A, C));
}

TEST(KTheoryShadow, SevenTwo) {
  auto rep = k_theory_shadow({7, 2});
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(claim(rep, "vertex_count").detail, "3 vertices, 2 exceptional curves, 2 specials");
}
