#include "quotient_forge/errors.hpp"
#include "quotient_forge/toric_geometry.hpp"

#include <gtest/gtest.h>

using namespace qforge;

TEST(FloorDivisor, SevenTwo) {
  auto rd = resolution_data({7, 2});
  EXPECT_EQ(floor_divisor({1, 0}, rd), (CoxVector{1, 0, 0, 0}));
  EXPECT_EQ(floor_divisor({0, 1}, rd), (CoxVector{0, 0, 0, 1}));
  EXPECT_EQ(floor_divisor({1, 3}, rd), (CoxVector{1, 1, 1, 3}));
}

TEST(LaurentDivisor, RejectsOutsideM) {
  auto rd = resolution_data({7, 2});
  EXPECT_EQ(laurent_divisor(7, 0, rd), (CoxVector{7, 4, 1, 0}));
  EXPECT_THROW(laurent_divisor(1, 0, rd), ConsistencyError);
}

TEST(SectionDivisor, SevenTwo) {
  auto rd = resolution_data({7, 2});
  EXPECT_EQ(section_divisor({0, 3}, 1, rd), (CoxVector{0, 1, 1, 3}));
  EXPECT_EQ(section_divisor({5, 0}, 2, rd), (CoxVector{5, 3, 1, 0}));
  EXPECT_EQ(section_divisor({1, 2}, 2, rd), (CoxVector{1, 1, 1, 2}));
}

TEST(SectionLabel, RejectsWrongCharacter) {
  auto rd = resolution_data({7, 2});
  auto g0 = bundle_chart_generators(0, rd);
  EXPECT_THROW(section_label({1, 0}, g0, g0, rd), ConsistencyError);
  EXPECT_EQ(section_label({7, 0}, g0, g0, rd), (CoxVector{7, 4, 1, 0}));
}

TEST(SectionLabel, AdditiveUnderComposition) {
  for (const auto &g : all_groups(25, 2)) {
    auto rd = resolution_data(g);
    std::vector<ChartGenerators> gens;
    for (int i = 0; i <= rd.ell; ++i) gens.push_back(bundle_chart_generators(i, rd));
    for (int i = 0; i <= rd.ell; ++i)
      for (int k = i; k <= rd.ell; ++k)
        for (int j = k; j <= rd.ell; ++j) {
          auto dx = [&](int s, int t) {
            return section_label(x_pow(rd.alpha(t) - rd.alpha(s)), gens[s], gens[t], rd);
          };
          auto dy = [&](int s, int t) {
            return section_label(y_pow(rd.beta(t) - rd.beta(s)), gens[s], gens[t], rd);
          };
          EXPECT_EQ(dx(i, k) + dx(k, j), dx(i, j)) << to_string(g);
          EXPECT_EQ(dy(j, k) + dy(k, i), dy(j, i)) << to_string(g);
        }
  }
}

TEST(IntersectionForm, SelfIntersectionsAndUndefinedPairs) {
  auto rd = resolution_data({21, 13});
  auto m = intersection_matrix(rd);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_FALSE(m[0][0].has_value());
  EXPECT_FALSE(m[0][5].has_value());
  EXPECT_EQ(m[0][1], 1);
  EXPECT_EQ(m[1][1], -2);
  EXPECT_EQ(m[2][2], -3);
  EXPECT_EQ(m[2][4], 0);
  IntersectionForm form(rd);
  EXPECT_THROW(form(0, 5), NonCompactPairing);
  EXPECT_THROW(form(0, 6), RangeViolation);
}

TEST(PicClass, PrincipalDivisorsVanish) {
  for (const auto &g : all_groups(30, 2)) {
    auto rd = resolution_data(g);
    for (int j = 0; j <= rd.ell; ++j) {
      auto [u, v] = chart_dual_generators(j, rd);
      PicClass zero{std::vector<std::int64_t>(rd.ell, 0)};
      EXPECT_EQ(pic_class(laurent_divisor(u.p, u.q, rd), rd), zero) << to_string(g);
      EXPECT_EQ(pic_class(laurent_divisor(v.p, v.q, rd), rd), zero) << to_string(g);
    }
  }
}

TEST(PicClass, SmithRouteAgreesWithIntersectionRoute) {
  for (const auto &g : all_groups(20, 2)) {
    auto rd = resolution_data(g);
    for (int i = 0; i <= rd.ell; ++i)
      for (int j = 0; j <= rd.ell; ++j) {
        auto di = bundle_divisor(i, rd), dj = bundle_divisor(j, rd);
        EXPECT_EQ(same_pic_class_snf(di, dj, rd), pic_class(di, rd) == pic_class(dj, rd))
            << to_string(g) << " " << i << " " << j;
      }
  }
}

TEST(ChartDualGenerators, SevenTwo) {
  auto rd = resolution_data({7, 2});
  auto [u0, v0] = chart_dual_generators(0, rd);
  EXPECT_EQ(u0, (LaurentExponent{1, -4}));
  EXPECT_EQ(v0, (LaurentExponent{0, 7}));
  auto [u2, v2] = chart_dual_generators(2, rd);
  EXPECT_EQ(u2, (LaurentExponent{7, 0}));
  EXPECT_EQ(v2, (LaurentExponent{-2, 1}));
  EXPECT_THROW(chart_dual_generators(3, rd), RangeViolation);
}

TEST(PreferredBundles, SevenTwoGenerators) {
  auto rd = resolution_data({7, 2});
  auto seq = preferred_bundles(rd);
  ASSERT_EQ(seq.bundles.size(), 3u);
  EXPECT_EQ(seq.generator(1, 0), y_pow(4));
  EXPECT_EQ(seq.generator(1, 1), x_pow(1));
  EXPECT_EQ(seq.generator(2, 1), y_pow(1));
  EXPECT_EQ(seq.generator(2, 2), x_pow(2));
  EXPECT_EQ(bundle_divisor(0, rd), (CoxVector{0, 0, 0, 0}));
}

TEST(PreferredBundles, DegreeMatrixIsIdentityAcrossSweep) {
  for (const auto &g : all_groups(40)) {
    auto rd = resolution_data(g);
    auto seq = preferred_bundles(rd);
    auto deg = degree_matrix(seq);
    ASSERT_EQ(deg.size(), static_cast<std::size_t>(rd.ell));
    for (int i = 0; i < rd.ell; ++i)
      for (int j = 0; j < rd.ell; ++j) EXPECT_EQ(deg[i][j], i == j ? 1 : 0) << to_string(g);
  }
}

TEST(PreferredBundles, ChartGeneratorsAgreeOnOverlaps) {
  for (const auto &g : all_groups(30, 2)) {
    auto rd = resolution_data(g);
    for (int i = 0; i <= rd.ell; ++i) {
      auto gens = bundle_chart_generators(i, rd);
      for (int j = 0; j < rd.ell; ++j) {
        // transition function on U_j cap U_{j+1} is a unit there
        auto q = laurent_divisor(std::int64_t{gens[j + 1].b} - gens[j].b,
                                 std::int64_t{gens[j + 1].c} - gens[j].c, rd);
        EXPECT_EQ(q[j + 1], 0) << to_string(g) << " L_" << i << " U_" << j;
      }
    }
  }
}
