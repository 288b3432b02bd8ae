#include "quotient_forge/errors.hpp"
#include "quotient_forge/special_quiver.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace qforge;

namespace {

struct Expected {
  int tail, head;
  PlaneMonomial mon;
};

void expect_arrows(const SpecialQuiver &sq, const std::vector<Expected> &want) {
  ASSERT_EQ(sq.arrow_count(), static_cast<int>(want.size()));
  for (std::size_t n = 0; n < want.size(); ++n) {
    const auto &a = sq.quiver.arrow(static_cast<int>(n));
    EXPECT_EQ(a.tail, want[n].tail) << "a" << n + 1;
    EXPECT_EQ(a.head, want[n].head) << "a" << n + 1;
    EXPECT_EQ(a.mon, want[n].mon) << "a" << n + 1;
  }
}

} // namespace

TEST(SpecialQuiver, SevenTwo) {
  auto sq = build_special_quiver({7, 2});
  expect_arrows(sq, {{0, 1, {1, 0}},
                     {1, 0, {0, 3}},
                     {1, 2, {1, 0}},
                     {2, 1, {0, 3}},
                     {2, 0, {5, 0}},
                     {0, 2, {0, 1}},
                     {2, 0, {3, 1}},
                     {2, 0, {1, 2}}});
  EXPECT_EQ(sq.kind[6], ArrowKind::XY);
  EXPECT_EQ(sq.xy_arrows(), (std::vector<int>{6, 7}));
  EXPECT_EQ(*sq.a(3).cox, (CoxVector{1, 1, 0, 0}));
  EXPECT_EQ(*sq.a(7).cox, (CoxVector{3, 2, 1, 1}));
  EXPECT_EQ(*sq.a(8).cox, (CoxVector{1, 1, 1, 2}));
}

TEST(SpecialQuiver, TwentyOneThirteen) {
  auto sq = build_special_quiver({21, 13});
  expect_arrows(sq, {{0, 1, {1, 0}},
                     {1, 0, {0, 8}},
                     {1, 2, {1, 0}},
                     {2, 1, {0, 8}},
                     {2, 3, {3, 0}},
                     {3, 2, {0, 3}},
                     {3, 4, {8, 0}},
                     {4, 3, {0, 1}},
                     {4, 0, {8, 0}},
                     {0, 4, {0, 1}},
                     {2, 0, {1, 3}},
                     {3, 0, {3, 1}}});
}

TEST(SpecialQuiver, TrivialAndAOne) {
  auto triv = build_special_quiver({1, 0});
  ASSERT_EQ(triv.arrow_count(), 2);
  EXPECT_EQ(triv.a(1).mon, x_pow(1));
  EXPECT_EQ(triv.a(2).mon, y_pow(1));
  auto a1 = build_special_quiver({2, 1});
  EXPECT_EQ(a1.arrow_count(), 4);
  EXPECT_TRUE(a1.xy_arrows().empty());
}

TEST(SpecialQuiver, ArrowStructureAcrossSweep) {
  for (const auto &g : all_groups(40)) {
    auto sq = build_special_quiver(g);
    const int n = sq.vertex_count(), ell = sq.ell();
    for (int i = 1; i <= ell + 1; ++i) {
      const auto &a = sq.a(x_arrow_number(i));
      EXPECT_EQ(a.tail, i - 1);
      EXPECT_EQ(a.head, i % n);
      EXPECT_EQ(a.mon.c, 0);
    }
    for (int i = 0; i <= ell; ++i) {
      const auto &a = sq.a(y_arrow_number(i));
      EXPECT_EQ(a.tail, (i + 1) % n);
      EXPECT_EQ(a.head, i);
      EXPECT_EQ(a.mon.b, 0);
    }
    for (int id : sq.xy_arrows()) {
      const auto &a = sq.quiver.arrow(id);
      EXPECT_EQ(a.head, 0) << to_string(g);
      EXPECT_GT(a.mon.b, 0);
      EXPECT_GT(a.mon.c, 0);
      EXPECT_TRUE(a.cox->effective());
    }
    for (int v = 1; v < n; ++v) EXPECT_EQ(sq.quiver.arrows_in(v).size(), 2u) << to_string(g);
    for (const auto &a : sq.quiver.arrows()) EXPECT_TRUE(a.cox->effective()) << to_string(g);
  }
}

TEST(SpecialQuiver, IotaIsTheSpecialBundle) {
  auto sq = build_special_quiver({7, 2});
  EXPECT_EQ(sq.iota(0), 0);
  EXPECT_EQ(sq.iota(1), 6);
  EXPECT_EQ(sq.iota(2), 5);
}

TEST(SpecialQuiver, LiftFollowsMckayWalk) {
  auto sq = build_special_quiver({7, 2});
  EXPECT_EQ(lift_to_special(0, "x", sq), (Path{0}));
  EXPECT_EQ(lift_to_special(0, "xx", sq), (Path{0, 2}));
  EXPECT_EQ(lift_to_special(2, "xyy", sq), (Path{7}));
  EXPECT_THROW(lift_to_special(0, "xy", sq), StructuralError);
}

TEST(Lambda, SevenTwoEntries) {
  auto sq = build_special_quiver({7, 2});
  auto entries = lambda_entries(sq);
  ASSERT_EQ(entries.size(), 8u);
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const auto &e : entries) {
    auto u = path_exponent(e.relation.p, 8), v = path_exponent(e.relation.q, 8);
    EXPECT_NE(u, v);
    seen.insert(std::minmax(u, v));
  }
  EXPECT_EQ(lambda_relations(sq).pairs.size(), seen.size());
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Lambda, PrimitiveCyclesAcrossSweep) {
  for (const auto &g : all_groups(30, 2)) {
    auto sq = build_special_quiver(g);
    auto gens = invariant_generators(g);
    for (const auto &e : lambda_entries(sq)) {
      auto m = sq.quiver.path_mon(e.relation.q);
      EXPECT_NE(std::find(gens.begin(), gens.end(), m), gens.end()) << to_string(g);
      EXPECT_EQ(sq.quiver.path_tail(e.relation.q), sq.quiver.arrow(e.arrow).tail);
      EXPECT_EQ(sq.quiver.path_mon(e.relation.p), m);
    }
  }
}

TEST(Lambda, PathsSpanHomSpaces) {
  // Paths in Q from i to j realise every monomial section up to degree 3r.
  for (const auto &g : all_groups(14, 2)) {
    auto sq = build_special_quiver(g);
    const int n = sq.vertex_count();
    for (int i = 0; i < n; ++i) {
      std::vector<std::set<PlaneMonomial>> reach(n);
      std::vector<std::pair<int, PlaneMonomial>> frontier{{i, PlaneMonomial{}}};
      std::set<std::pair<int, PlaneMonomial>> visited(frontier.begin(), frontier.end());
      while (!frontier.empty()) {
        auto [v, m] = frontier.back();
        frontier.pop_back();
        reach[v].insert(m);
        for (int id : sq.quiver.arrows_out(v)) {
          const auto &a = sq.quiver.arrow(id);
          auto next = m * a.mon;
          if (next.b + next.c > 3 * g.r) continue;
          if (visited.insert({a.head, next}).second) frontier.push_back({a.head, next});
        }
      }
      auto deg = [&](int v) { return char_of(x_pow(sq.rd.alpha(v)), g).idx; };
      for (int j = 0; j < n; ++j)
        for (int b = 0; b <= 3 * g.r; ++b)
          for (int c = 0; b + c <= 3 * g.r; ++c) {
            PlaneMonomial m{b, c};
            bool section = (deg(i) + char_of(m, g).idx) % g.r == deg(j);
            EXPECT_EQ(reach[j].count(m) == 1, section)
                << to_string(g) << " " << i << "->" << j << " " << to_string(m);
          }
    }
  }
}
