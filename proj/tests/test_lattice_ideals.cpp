#include "quotient_forge/lattice_ideals.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qforge;

namespace {

auto mono(int n, std::initializer_list<int> vars) {
  Exponent e(n, 0);
  for (int v : vars) ++e[v - 1];
  return e;
}

} // namespace

TEST(WeightMatrix, AOneShape) {
  auto sq = build_special_quiver({2, 1});
  auto W = weight_matrix(sq);
  EXPECT_EQ(W.rows(), 5u);
  EXPECT_EQ(W.cols(), 4u);
  auto inc = incidence_block(W, 2);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(inc(0, j) + inc(1, j), 0);
}

TEST(WeightMatrix, IncidenceIsTotallyUnimodular) {
  for (const auto &g : all_groups(12, 2)) {
    auto sq = build_special_quiver(g);
    auto inc = incidence_block(weight_matrix(sq), sq.vertex_count());
    EXPECT_TRUE(total_unimodularity(inc).holds) << to_string(g);
  }
}

TEST(ToricIdeal, TwistedCubic) {
  IntegerMatrix M{{3, 2, 1, 0}, {0, 1, 2, 3}};
  auto I = toric_ideal(M);
  BinomialIdeal want;
  want.num_vars = 4;
  want.add_binomial({1, 0, 1, 0}, {0, 2, 0, 0});
  want.add_binomial({0, 1, 0, 1}, {0, 0, 2, 0});
  want.add_binomial({1, 0, 0, 1}, {0, 1, 1, 0});
  EXPECT_TRUE(ideal_equal(I, want));
  EXPECT_EQ(I.binomials.size(), 3u);
}

TEST(ToricIdeal, ContainsLatticeBasisBinomials) {
  IntegerMatrix M{{1, 1, 1, 1}, {0, 1, 2, 3}};
  auto I = toric_ideal(M);
  BinomialIdeal lattice_basis;
  lattice_basis.num_vars = 4;
  for (const auto &w : kernel_lattice(M)) {
    auto [u, v] = split_kernel_vector(w);
    lattice_basis.add_binomial(u, v);
  }
  for (const auto &[u, v] : I.binomials) EXPECT_TRUE(in_kernel(M, u, v));
  auto gb = groebner_basis(I.as_binomials(), I.order());
  for (const auto &b : lattice_basis.as_binomials()) EXPECT_TRUE(gb.contains(b));
}

TEST(ToricIdeal, SevenTwoMatchesPrintedGenerators) {
  auto sq = build_special_quiver({7, 2});
  auto IQ = toric_ideal(weight_matrix(sq));
  BinomialIdeal P;
  P.num_vars = 8;
  const int n = 8;
  P.add_binomial(mono(n, {7, 7}), mono(n, {5, 8}));
  P.add_binomial(mono(n, {3, 4}), mono(n, {6, 8}));
  P.add_binomial(mono(n, {1, 2}), mono(n, {6, 8}));
  P.add_binomial(mono(n, {3, 7, 8}), mono(n, {2, 5}));
  P.add_binomial(mono(n, {1, 7, 8}), mono(n, {4, 5}));
  P.add_binomial(mono(n, {1, 3, 7}), mono(n, {5, 6}));
  P.add_binomial(mono(n, {3, 8, 8}), mono(n, {2, 7}));
  P.add_binomial(mono(n, {1, 8, 8}), mono(n, {4, 7}));
  P.add_binomial(mono(n, {1, 3, 8}), mono(n, {6, 7}));
  EXPECT_TRUE(ideal_equal(IQ, P));
}

TEST(SpanningTrees, SmallDigraph) {
  LabelledQuiver q(3);
  q.add_arrow({0, 0, 1, x_pow(1), {}});
  q.add_arrow({1, 0, 2, x_pow(1), {}});
  q.add_arrow({2, 1, 2, x_pow(1), {}});
  q.add_arrow({3, 2, 1, x_pow(1), {}});
  q.add_arrow({4, 1, 1, x_pow(1), {}});
  EXPECT_EQ(spanning_trees(q), (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 3}}));
}

TEST(SpanningTrees, MatchClosedFormAcrossSweep) {
  for (const auto &g : all_groups(40)) {
    auto sq = build_special_quiver(g);
    auto trees = spanning_trees(sq.quiver);
    std::set<std::vector<int>> want;
    for (int j = 0; j <= sq.ell(); ++j) want.insert(expected_tree(j, sq.ell()));
    EXPECT_EQ(std::set<std::vector<int>>(trees.begin(), trees.end()), want) << to_string(g);
    EXPECT_EQ(trees.size(), static_cast<std::size_t>(sq.ell() + 1));
  }
}

TEST(IrrelevantIdeal, SevenTwo) {
  auto B = irrelevant_ideal(build_special_quiver({7, 2}));
  std::set<Exponent> want{mono(8, {1, 3}), mono(8, {1, 6}), mono(8, {4, 6})};
  EXPECT_EQ(B.monomial_set(), want);
}

TEST(RelationIdeal, ContainedInKernelAcrossSweep) {
  for (const auto &g : all_groups(40)) {
    auto sq = build_special_quiver(g);
    auto W = weight_matrix(sq);
    for (const auto &[u, v] : relation_ideal(sq).binomials) EXPECT_TRUE(in_kernel(W, u, v)) << to_string(g);
  }
}

TEST(RelationIdeal, SevenTwoExact) {
  auto J = relation_ideal(build_special_quiver({7, 2}));
  BinomialIdeal want;
  want.num_vars = 8;
  want.add_binomial(mono(8, {1, 2}), mono(8, {3, 4}));
  want.add_binomial(mono(8, {5, 6}), mono(8, {1, 3, 7}));
  want.add_binomial(mono(8, {3, 4}), mono(8, {6, 8}));
  want.add_binomial(mono(8, {1, 3, 8}), mono(8, {6, 7}));
  EXPECT_EQ(J.binomial_set(), want.binomial_set());
}

TEST(Saturation, SevenTwo) {
  auto sq = build_special_quiver({7, 2});
  auto J = relation_ideal(sq);
  auto IQ = toric_ideal(weight_matrix(sq));
  auto B = irrelevant_ideal(sq);
  EXPECT_FALSE(ideal_equal(J, IQ));
  auto sj = ideal_saturation(J, B), si = ideal_saturation(IQ, B);
  EXPECT_TRUE(ideal_equal(sj.ideal, si.ideal));
  EXPECT_TRUE(ideal_equal(si.ideal, to_poly_ideal(IQ)));
}

TEST(Saturation, ByMonomial) {
  // (x*y - x*z) : x^infinity = (y - z)
  auto ord = MonomialOrder::grevlex(3);
  std::vector<Binomial> gens{Binomial::make({1, 1, 0}, {1, 0, 1}, ord)};
  auto gb = saturate_by_monomial(gens, {1, 0, 0}, ord);
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis.front(), Binomial::make({0, 1, 0}, {0, 0, 1}, ord));
}

TEST(Intersection, MonomialIdeals) {
  PolyIdeal A{2, {Polynomial::monomial({1, 0})}}, B{2, {Polynomial::monomial({0, 1})}};
  auto C = ideal_intersection(A, B);
  PolyIdeal want{2, {Polynomial::monomial({1, 1})}};
  EXPECT_TRUE(ideal_equal(C, want));
}
