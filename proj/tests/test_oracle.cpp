#include "quotient_forge.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <tuple>

using namespace qforge;

namespace {

auto load_oracle() -> const json & {
  static const json doc = [] {
    std::ifstream in(QF_ORACLE_FILE);
    if (!in) throw std::runtime_error("cannot open " + std::string(QF_ORACLE_FILE));
    return json::parse(in);
  }();
  return doc;
}

auto pair_list(const json &j) {
  std::vector<std::pair<int, int>> out;
  for (const auto &p : j) out.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return out;
}

using ArrowKey = std::tuple<int, int, int, int, std::vector<std::int64_t>>;
using TreeKey = std::set<std::tuple<int, int, int, int>>;

class Oracle : public ::testing::TestWithParam<std::size_t> {
protected:
  [[nodiscard]] auto record() const -> const json & { return load_oracle().at("groups").at(GetParam()); }
  [[nodiscard]] auto group() const -> GroupType {
    return validate_group(record().at("r").get<int>(), record().at("a").get<int>());
  }
};

} // namespace

TEST_P(Oracle, Resolution) {
  const auto &rec = record();
  auto rd = resolution_data(group());
  EXPECT_EQ(rd.ell, rec.at("ell").get<int>());
  EXPECT_EQ(rd.coeffs, rec.at("coeffs").get<std::vector<int>>());
  std::vector<std::pair<int, int>> pairs;
  for (const auto &p : rd.pairs) pairs.emplace_back(p.beta, p.alpha);
  EXPECT_EQ(pairs, pair_list(rec.at("pairs")));
}

TEST_P(Oracle, InvariantsAndSpecials) {
  const auto &rec = record();
  auto g = group();
  std::vector<std::pair<int, int>> inv;
  for (auto m : invariant_generators(g)) inv.emplace_back(m.b, m.c);
  EXPECT_EQ(inv, pair_list(rec.at("invariants")));
  std::vector<int> specials;
  for (auto c : special_characters(g, resolution_data(g))) specials.push_back(c.idx);
  std::sort(specials.begin(), specials.end());
  EXPECT_EQ(specials, rec.at("specials").get<std::vector<int>>());
}

TEST_P(Oracle, ArrowsAndLabels) {
  const auto &rec = record();
  auto sq = build_special_quiver(group());
  std::multiset<ArrowKey> got, want;
  for (const auto &a : sq.quiver.arrows()) got.insert({a.tail, a.head, a.mon.b, a.mon.c, a.cox->coeffs});
  for (const auto &a : rec.at("arrows"))
    want.insert({a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>(), a.at(3).get<int>(),
                 a.at(4).get<std::vector<std::int64_t>>()});
  EXPECT_EQ(got, want);
}

TEST_P(Oracle, SpanningTrees) {
  const auto &rec = record();
  auto sq = build_special_quiver(group());
  std::set<TreeKey> got, want;
  for (const auto &t : spanning_trees(sq.quiver)) {
    TreeKey k;
    for (int id : t) {
      const auto &a = sq.quiver.arrow(id);
      k.insert({a.tail, a.head, a.mon.b, a.mon.c});
    }
    got.insert(k);
  }
  for (const auto &t : rec.at("trees")) {
    TreeKey k;
    for (const auto &a : t) k.insert({a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>(), a.at(3).get<int>()});
    want.insert(k);
  }
  EXPECT_EQ(got, want);
}

TEST_P(Oracle, GHilbChartMonomials) {
  const auto &rec = record();
  auto rd = resolution_data(group());
  const auto &charts = rec.at("chart_generators");
  ASSERT_EQ(charts.size(), static_cast<std::size_t>(rd.ell + 1));
  for (int j = 0; j <= rd.ell; ++j)
    for (int rho = 0; rho < rd.r(); ++rho) {
      auto m = ghilb_chart_monomial(j, Character{rho}, rd);
      const auto &w = charts.at(j).at(rho);
      EXPECT_EQ(m, (PlaneMonomial{w.at(0).get<int>(), w.at(1).get<int>()})) << "chart " << j << " rho " << rho;
    }
}

TEST_P(Oracle, SemistableEqualsStable) {
  const auto &rec = record();
  if (!rec.contains("semistable_equals_stable")) GTEST_SKIP() << "not in the oracle";
  auto sq = build_special_quiver(group());
  auto res = semistable_equals_stable(sq.quiver, canonical_weight(sq.vertex_count()));
  EXPECT_EQ(res.equal, rec.at("semistable_equals_stable").get<bool>());
}

INSTANTIATE_TEST_SUITE_P(Frozen, Oracle, ::testing::Range<std::size_t>(0, load_oracle().at("groups").size()),
                         [](const ::testing::TestParamInfo<std::size_t> &info) {
                           const auto &rec = load_oracle().at("groups").at(info.param);
                           return "r" + std::to_string(rec.at("r").get<int>()) + "_a" +
                                  std::to_string(rec.at("a").get<int>());
                         });
