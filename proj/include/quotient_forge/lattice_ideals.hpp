#pragma once

// The weight matrix pi = (inc, div), the toric ideal I_Q, spanning trees and
// B_Q, the relation ideal J, and saturation.

#include "quotient_forge/groebner.hpp"
#include "quotient_forge/integer_matrix.hpp"
#include "quotient_forge/special_quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace qforge {

/// Rows: chi_h - chi_t per vertex, then the Cox label per ray. Columns:
/// arrows by id.
inline auto weight_matrix(const LabelledQuiver &q, std::size_t rays) -> IntegerMatrix {
  const std::size_t nv = q.vertex_count();
  IntegerMatrix M(nv + rays, q.arrow_count());
  for (const auto &a : q.arrows()) {
    if (!a.cox) throw StructuralError("weight_matrix needs Cox labels");
    M(a.head, a.id) += 1;
    M(a.tail, a.id) -= 1;
    for (std::size_t k = 0; k < rays; ++k) M(nv + k, a.id) = (*a.cox)[k];
  }
  return M;
}

inline auto weight_matrix(const SpecialQuiver &sq) -> IntegerMatrix {
  return weight_matrix(sq.quiver, static_cast<std::size_t>(sq.rd.rays()));
}

inline auto incidence_block(const IntegerMatrix &W, std::size_t vertices) -> IntegerMatrix {
  std::vector<std::size_t> rs(vertices), cs(W.cols());
  for (std::size_t i = 0; i < vertices; ++i) rs[i] = i;
  for (std::size_t j = 0; j < W.cols(); ++j) cs[j] = j;
  return W.submatrix(rs, cs);
}

/// Binomials y^u - y^v (stored with u > v in grevlex) and monomials y^u.
struct BinomialIdeal {
  int num_vars = 0;
  std::vector<std::pair<Exponent, Exponent>> binomials;
  std::vector<Exponent> monomials;

  friend auto operator==(const BinomialIdeal &, const BinomialIdeal &) -> bool = default;
  [[nodiscard]] auto order() const -> MonomialOrder { return MonomialOrder::grevlex(num_vars); }

  /// Adds y^u - y^v after cancelling common factors; drops zero. Returns
  /// false when the normalized binomial was already present.
  auto add_binomial(Exponent u, Exponent v) -> bool {
    for (std::size_t k = 0; k < u.size(); ++k) {
      int c = std::min(u[k], v[k]);
      u[k] -= c;
      v[k] -= c;
    }
    auto b = Binomial::make(std::move(u), std::move(v), order());
    if (b.is_zero()) return false;
    std::pair<Exponent, Exponent> key{b.lead, b.tail};
    if (std::find(binomials.begin(), binomials.end(), key) != binomials.end()) return false;
    binomials.push_back(std::move(key));
    return true;
  }

  [[nodiscard]] auto as_binomials() const -> std::vector<Binomial> {
    if (!monomials.empty()) throw std::logic_error("monomial generators in a binomial engine");
    std::vector<Binomial> out;
    for (const auto &[u, v] : binomials) out.push_back(Binomial::make(u, v, order()));
    return out;
  }
  [[nodiscard]] auto as_polynomials() const -> std::vector<Polynomial> {
    std::vector<Polynomial> out;
    auto ord = order();
    for (const auto &[u, v] : binomials)
      out.push_back(Polynomial::from_binomial(Binomial::make(u, v, ord)));
    for (const auto &m : monomials) out.push_back(Polynomial::monomial(m));
    return out;
  }

  /// Normalized binomials as a sorted set, for exact comparison.
  [[nodiscard]] auto binomial_set() const -> std::set<std::pair<Exponent, Exponent>> {
    return {binomials.begin(), binomials.end()};
  }
  [[nodiscard]] auto monomial_set() const -> std::set<Exponent> {
    return {monomials.begin(), monomials.end()};
  }
};

/// u - v split into positive and negative parts.
inline auto split_kernel_vector(const IntVector &w) -> std::pair<Exponent, Exponent> {
  Exponent u(w.size(), 0), v(w.size(), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    int x = static_cast<int>(w[k]);
    if (x > 0) u[k] = x;
    else v[k] = -x;
  }
  return {u, v};
}

namespace detail {

/// Appends one extra variable t (index n) to exponents of length n.
inline auto with_extra(const Exponent &e) -> Exponent {
  Exponent out = e;
  out.push_back(0);
  return out;
}

inline auto drop_extra(const Exponent &e) -> Exponent { return {e.begin(), e.end() - 1}; }

} // namespace detail

/// I : (y^m)^infinity for a binomial ideal, by adjoining t y^m - 1 and
/// eliminating t. Output is a reduced grevlex basis.
inline auto saturate_by_monomial(const std::vector<Binomial> &gens, const Exponent &m,
                                 const MonomialOrder &ord) -> GroebnerBasis<Binomial> {
  const std::size_t n = m.size();
  auto elim = MonomialOrder::elimination(n + 1, {static_cast<int>(n)});
  std::vector<Binomial> ext;
  for (const auto &g : gens) {
    if (g.is_zero()) continue;
    ext.push_back(Binomial::make(detail::with_extra(g.lead), detail::with_extra(g.tail), elim));
  }
  auto tm = detail::with_extra(m);
  tm[n] = 1;
  ext.push_back(Binomial::make(tm, Exponent(n + 1, 0), elim));
  auto gb = groebner_basis(ext, elim);
  std::vector<Binomial> kept;
  for (const auto &g : gb.basis)
    if (g.lead[n] == 0 && g.tail[n] == 0)
      kept.push_back(Binomial::make(detail::drop_extra(g.lead), detail::drop_extra(g.tail), ord));
  return groebner_basis(kept, ord);
}

inline auto to_binomial_ideal(const std::vector<Binomial> &basis, int num_vars) -> BinomialIdeal {
  BinomialIdeal I;
  I.num_vars = num_vars;
  for (const auto &b : basis)
    if (!b.is_zero()) I.add_binomial(b.lead, b.tail);
  return I;
}

/// The lattice ideal of ker M: kernel-basis binomials saturated by each
/// variable in turn, in the order given by `variable_order` (all variables
/// when empty).
inline auto toric_ideal(const IntegerMatrix &M, std::vector<int> variable_order = {})
    -> BinomialIdeal {
  const int n = static_cast<int>(M.cols());
  if (variable_order.empty())
    for (int v = 0; v < n; ++v) variable_order.push_back(v);
  auto ord = MonomialOrder::grevlex(n);
  std::vector<Binomial> gens;
  for (const auto &w : kernel_lattice(M)) {
    auto [u, v] = split_kernel_vector(w);
    gens.push_back(Binomial::make(u, v, ord));
  }
  if (gens.empty()) return to_binomial_ideal({}, n);
  for (int v : variable_order) {
    Exponent m(n, 0);
    m[v] = 1;
    gens = saturate_by_monomial(gens, m, ord).basis;
  }
  return to_binomial_ideal(gens, n);
}

/// Arrow subsets containing exactly one arrow into every vertex other than
/// `root` and none into root, such that every vertex is reached from root.
inline auto spanning_trees(const LabelledQuiver &q, int root = 0) -> std::vector<std::vector<int>> {
  const int nv = q.vertex_count();
  const auto &arrows = q.arrows();
  std::vector<char> reached(nv, 0), excluded(arrows.size(), 0);
  std::vector<int> chosen;
  std::vector<std::vector<int>> out, outgoing(nv);
  for (const auto &a : arrows) outgoing[a.tail].push_back(a.id);
  reached[root] = 1;

  // Can every vertex still be reached using arrows that are not excluded?
  auto feasible = [&] {
    std::vector<char> seen = reached;
    std::vector<int> stack;
    for (int v = 0; v < nv; ++v)
      if (seen[v]) stack.push_back(v);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : outgoing[v]) {
        const auto &a = arrows[id];
        if (excluded[id] || seen[a.head]) continue;
        seen[a.head] = 1;
        stack.push_back(a.head);
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };

  // Branch on the first frontier arrow: trees using it, then trees avoiding it.
  std::function<void()> rec = [&] {
    if (static_cast<int>(chosen.size()) == nv - 1) {
      auto tree = chosen;
      std::sort(tree.begin(), tree.end());
      out.push_back(std::move(tree));
      return;
    }
    int pick = -1;
    for (const auto &a : arrows)
      if (!excluded[a.id] && reached[a.tail] && !reached[a.head]) {
        pick = a.id;
        break;
      }
    if (pick < 0) return;
    int h = arrows[pick].head;
    chosen.push_back(pick);
    reached[h] = 1;
    rec();
    reached[h] = 0;
    chosen.pop_back();
    excluded[pick] = 1;
    if (feasible()) rec();
    excluded[pick] = 0;
  };
  if (feasible()) rec();
  std::sort(out.begin(), out.end());
  return out;
}

/// The closed form T_j = {a_1, a_3, ..., a_{2j-1}} u {a_{2j+4}, ..., a_{2ell+2}}
/// as arrow ids.
inline auto expected_tree(int j, int ell) -> std::vector<int> {
  std::vector<int> t;
  for (int k = 1; k <= j; ++k) t.push_back(2 * k - 1 - 1);
  for (int n = 2 * j + 4; n <= 2 * ell + 2; n += 2) t.push_back(n - 1);
  std::sort(t.begin(), t.end());
  return t;
}

inline auto tree_monomial(const std::vector<int> &tree, int num_vars) -> Exponent {
  Exponent e(num_vars, 0);
  for (int id : tree) ++e[id];
  return e;
}

inline auto irrelevant_ideal(const SpecialQuiver &sq) -> BinomialIdeal {
  BinomialIdeal B;
  B.num_vars = sq.arrow_count();
  for (const auto &t : spanning_trees(sq.quiver)) B.monomials.push_back(tree_monomial(t, B.num_vars));
  std::sort(B.monomials.begin(), B.monomials.end());
  return B;
}

/// J: the binomials y_p - y_q of Lambda.
inline auto relation_ideal(const SpecialQuiver &sq, const RelationSet &lambda) -> BinomialIdeal {
  BinomialIdeal J;
  J.num_vars = sq.arrow_count();
  for (const auto &pr : lambda.pairs)
    J.add_binomial(path_exponent(pr.p, J.num_vars), path_exponent(pr.q, J.num_vars));
  return J;
}

inline auto relation_ideal(const SpecialQuiver &sq) -> BinomialIdeal {
  return relation_ideal(sq, lambda_relations(sq));
}

/// u - v lies in ker W.
inline auto in_kernel(const IntegerMatrix &W, const Exponent &u, const Exponent &v) -> bool {
  IntVector w(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) w[k] = u[k] - v[k];
  auto img = W * w;
  return std::all_of(img.begin(), img.end(), [](const Integer &x) { return x == 0; });
}

/// A general ideal in a polynomial ring with num_vars variables.
struct PolyIdeal {
  int num_vars = 0;
  std::vector<Polynomial> gens;
};

inline auto to_poly_ideal(const BinomialIdeal &I) -> PolyIdeal { return {I.num_vars, I.as_polynomials()}; }

inline auto ideal_equal(const PolyIdeal &A, const PolyIdeal &B) -> bool {
  if (A.num_vars != B.num_vars) return false;
  return ideal_equal(A.gens, B.gens, MonomialOrder::grevlex(A.num_vars));
}

inline auto ideal_equal(const BinomialIdeal &A, const BinomialIdeal &B) -> bool {
  if (A.num_vars != B.num_vars) return false;
  if (!A.monomials.empty() || !B.monomials.empty()) return ideal_equal(to_poly_ideal(A), to_poly_ideal(B));
  return ideal_equal(A.as_binomials(), B.as_binomials(), A.order());
}

/// A intersect B via t A + (1 - t) B, eliminating t.
inline auto ideal_intersection(const PolyIdeal &A, const PolyIdeal &B) -> PolyIdeal {
  const int n = A.num_vars;
  auto elim = MonomialOrder::elimination(n + 1, {n});
  std::vector<Polynomial> gens;
  for (const auto &f : A.gens) {
    std::vector<Term> ts;
    for (const auto &t : f.terms) {
      auto e = detail::with_extra(t.exp);
      e[n] = 1;
      ts.push_back({e, t.coeff});
    }
    gens.push_back(Polynomial::from_terms(ts, elim));
  }
  for (const auto &f : B.gens) {
    std::vector<Term> ts;
    for (const auto &t : f.terms) {
      ts.push_back({detail::with_extra(t.exp), t.coeff});
      auto e = detail::with_extra(t.exp);
      e[n] = 1;
      ts.push_back({e, -t.coeff});
    }
    gens.push_back(Polynomial::from_terms(ts, elim));
  }
  auto gb = groebner_basis(gens, elim);
  PolyIdeal out{n, {}};
  auto ord = MonomialOrder::grevlex(n);
  for (const auto &g : gb.basis) {
    if (g.terms.front().exp[n] != 0) continue;
    std::vector<Term> ts;
    for (const auto &t : g.terms) ts.push_back({detail::drop_extra(t.exp), t.coeff});
    out.gens.push_back(Polynomial::from_terms(ts, ord));
  }
  return out;
}

struct SaturationResult {
  PolyIdeal ideal;
  std::vector<BinomialIdeal> components; // I : m^infinity per generator m of B
  bool components_equal = false;          // the intersection was short-circuited
};

/// I : B^infinity = intersection over generators m of B of I : m^infinity.
inline auto ideal_saturation(const BinomialIdeal &I, const BinomialIdeal &B) -> SaturationResult {
  SaturationResult res;
  const int n = I.num_vars;
  auto ord = I.order();
  auto gens = I.as_binomials();
  bool trivial = std::none_of(gens.begin(), gens.end(), [](const Binomial &b) { return !b.is_zero(); });
  if (trivial || B.monomials.empty()) {
    // (0) : B = 0; the zero ideal B gives the unit ideal but is never used.
    res.ideal = {n, {}};
    res.components_equal = true;
    if (!trivial) res.ideal = to_poly_ideal(I);
    return res;
  }
  for (const auto &m : B.monomials)
    res.components.push_back(to_binomial_ideal(saturate_by_monomial(gens, m, ord).basis, n));
  res.components_equal = true;
  for (std::size_t k = 1; k < res.components.size() && res.components_equal; ++k)
    res.components_equal = ideal_equal(res.components[0], res.components[k]);
  if (res.components_equal) {
    res.ideal = to_poly_ideal(res.components[0]);
    return res;
  }
  res.ideal = to_poly_ideal(res.components[0]);
  for (std::size_t k = 1; k < res.components.size(); ++k)
    res.ideal = ideal_intersection(res.ideal, to_poly_ideal(res.components[k]));
  return res;
}

} // namespace qforge
