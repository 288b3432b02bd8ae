#pragma once

// Verification of the moduli construction: theta-stability, the chart data
// of the closed immersion, chart-by-chart elimination, the saturation
// equality and the K-theoretic shadow.

#include "quotient_forge/lattice_ideals.hpp"
#include "quotient_forge/report.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qforge {

// ---------------------------------------------------------------------------
// Stability

struct Weight {
  std::vector<std::int64_t> theta;
};

/// (-ell, 1, ..., 1) on ell + 1 vertices.
inline auto canonical_weight(int vertex_count) -> Weight {
  Weight w;
  w.theta.assign(vertex_count, 1);
  w.theta[0] = -(vertex_count - 1);
  return w;
}

/// One scalar per arrow id; every vertex space is one-dimensional.
using QuiverRep = std::vector<Rational>;

enum class Stability { Stable, SemistableOnly, Unstable };

inline auto to_string(Stability s) -> std::string {
  switch (s) {
  case Stability::Stable: return "stable";
  case Stability::SemistableOnly: return "semistable";
  case Stability::Unstable: return "unstable";
  }
  return "?";
}

inline constexpr int kMaxStabilityVertices = 24;

namespace detail {

/// need[v]: vertices any subrepresentation containing v must contain.
inline auto classify_closed_sets(const std::vector<std::uint32_t> &need, const Weight &theta)
    -> Stability {
  const int n = static_cast<int>(need.size());
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  bool strict = true;
  for (std::uint32_t S = 1; S < full; ++S) {
    bool closed = true;
    std::int64_t w = 0;
    for (int v = 0; v < n && closed; ++v)
      if (S >> v & 1u) {
        if ((need[v] & ~S) != 0) closed = false;
        w += theta.theta[v];
      }
    if (!closed) continue;
    if (w < 0) return Stability::Unstable;
    if (w == 0) strict = false;
  }
  return strict ? Stability::Stable : Stability::SemistableOnly;
}

} // namespace detail

inline auto is_theta_stable(const QuiverRep &w, const Weight &theta, const LabelledQuiver &q)
    -> Stability {
  const int n = q.vertex_count();
  if (n > kMaxStabilityVertices) throw RangeViolation("too many vertices for subset enumeration");
  if (static_cast<int>(theta.theta.size()) != n) throw RangeViolation("weight has wrong length");
  std::vector<std::uint32_t> need(n, 0);
  for (const auto &a : q.arrows())
    if (w.at(a.id) != 0) need[a.tail] |= 1u << a.head;
  return detail::classify_closed_sets(need, theta);
}

struct SemistabilityResult {
  bool equal = false;
  std::string method;
};

/// No support pattern of a representation with one-dimensional vertex
/// spaces is strictly theta-semistable. Exhaustive over distinct (tail,
/// head) patterns for at most `exhaustive_vertices` vertices; otherwise
/// the absence of proper subsets of weight zero is checked, which suffices.
inline auto semistable_equals_stable(const LabelledQuiver &q, const Weight &theta,
                                     int exhaustive_vertices = 4) -> SemistabilityResult {
  const int n = q.vertex_count();
  std::set<std::pair<int, int>> edges;
  for (const auto &a : q.arrows())
    if (a.tail != a.head) edges.insert({a.tail, a.head});
  std::vector<std::pair<int, int>> E(edges.begin(), edges.end());

  auto exhaustive = [&]() -> SemistabilityResult {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << E.size()); ++mask) {
      std::vector<std::uint32_t> need(n, 0);
      for (std::size_t k = 0; k < E.size(); ++k)
        if (mask >> k & 1u) need[E[k].first] |= 1u << E[k].second;
      if (detail::classify_closed_sets(need, theta) == Stability::SemistableOnly)
        return {false, "exhaustive over " + std::to_string(std::uint64_t{1} << E.size()) +
                           " support patterns"};
    }
    return {true, "exhaustive over " + std::to_string(std::uint64_t{1} << E.size()) +
                      " support patterns"};
  };
  if (n <= exhaustive_vertices) return exhaustive();

  // Count subsets by weight; only the empty and the full set may weigh 0.
  std::int64_t lo = 0, hi = 0;
  for (auto t : theta.theta) (t < 0 ? lo : hi) += t;
  std::vector<std::uint64_t> count(static_cast<std::size_t>(hi - lo + 1), 0);
  count[static_cast<std::size_t>(-lo)] = 1;
  for (auto t : theta.theta) {
    auto next = count;
    for (std::size_t s = 0; s < count.size(); ++s)
      if (count[s]) {
        auto target = static_cast<std::int64_t>(s) + t;
        if (target >= 0 && target < static_cast<std::int64_t>(count.size()))
          next[static_cast<std::size_t>(target)] = std::min<std::uint64_t>(
              next[static_cast<std::size_t>(target)] + count[s], 1000);
      }
    count = std::move(next);
  }
  if (count[static_cast<std::size_t>(-lo)] == 2)
    return {true, "no proper nonempty vertex subset has weight 0"};
  if (E.size() <= 20 && n <= kMaxStabilityVertices) return exhaustive();
  throw RangeViolation("semistable_equals_stable: undecided for this weight");
}

/// For the canonical weight: stable iff some spanning tree is supported,
/// compared over every arrow mask.
inline auto stability_tree_crosscheck(const LabelledQuiver &q) -> bool {
  auto trees = spanning_trees(q);
  auto theta = canonical_weight(q.vertex_count());
  const int m = q.arrow_count();
  if (m > 22) throw RangeViolation("too many arrows for mask enumeration");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    QuiverRep w(m, Rational(0));
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1u) w[k] = 1;
    bool tree = std::any_of(trees.begin(), trees.end(), [&](const std::vector<int> &t) {
      return std::all_of(t.begin(), t.end(), [&](int id) { return (mask >> id & 1u) != 0; });
    });
    if (tree != (is_theta_stable(w, theta, q) == Stability::Stable)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Closed immersion chart data

struct ChartImmersionCheck {
  int chart = 0;
  std::vector<Path> paths; // v_j(i), i = 0..ell
  CoxVector pi2_vj;
  CoxVector div_sj;
  CoxVector plus_difference, plus_expected;
  CoxVector minus_difference, minus_expected;
  bool passed = false;
  std::string detail;
};

/// The lift to Q of the McKay walk from 0 reading x^b then y^c.
inline auto path_from_origin(PlaneMonomial mon, const SpecialQuiver &sq) -> Path {
  std::string word = std::string(mon.b, 'x') + std::string(mon.c, 'y');
  return lift_to_special(0, word, sq);
}

inline auto closed_immersion_chart_check(int j, const SpecialQuiver &sq) -> ChartImmersionCheck {
  const auto &rd = sq.rd;
  const int ell = rd.ell;
  const auto rays = static_cast<std::size_t>(rd.rays());
  if (j < 0 || j > ell) throw RangeViolation("chart index out of range");
  ChartImmersionCheck res;
  res.chart = j;
  std::ostringstream why;
  bool ok = true;

  auto realise = [&](PlaneMonomial mon, int target) {
    auto p = path_from_origin(mon, sq);
    int head = sq.quiver.path_head(p, 0);
    if (head != target % (ell + 1)) {
      ok = false;
      why << "path " << to_string(mon) << " ends at " << head << "; ";
    }
    return p;
  };

  res.pi2_vj = CoxVector(rays);
  res.div_sj = CoxVector(rays);
  for (int i = 0; i <= ell; ++i) {
    auto mon = i <= j ? x_pow(rd.alpha(i)) : y_pow(rd.beta(i));
    auto p = realise(mon, i);
    res.pi2_vj += sq.quiver.path_div(p, rays);
    res.div_sj += section_label(mon, bundle_chart_generators(0, rd), bundle_chart_generators(i, rd), rd);
    res.paths.push_back(std::move(p));
  }
  if (res.pi2_vj != res.div_sj) {
    ok = false;
    why << "pi2(v_j) = " << to_string(res.pi2_vj) << " but div(s_j) = " << to_string(res.div_sj) << "; ";
  }

  auto div_of = [&](PlaneMonomial mon, int target) {
    return sq.quiver.path_div(realise(mon, target), rays);
  };
  auto [gen_minus, gen_plus] = chart_dual_generators(j, rd);
  res.plus_difference = div_of(y_pow(rd.beta(j)), j) - div_of(x_pow(rd.alpha(j)), j);
  res.plus_expected = laurent_divisor(gen_plus.p, gen_plus.q, rd);
  res.minus_difference = div_of(x_pow(rd.alpha(j + 1)), j + 1) - div_of(y_pow(rd.beta(j + 1)), j + 1);
  res.minus_expected = laurent_divisor(gen_minus.p, gen_minus.q, rd);
  if (res.plus_difference != res.plus_expected) {
    ok = false;
    why << "pi2(v_j^+ - v_j) = " << to_string(res.plus_difference) << "; ";
  }
  if (res.minus_difference != res.minus_expected) {
    ok = false;
    why << "pi2(v_j^- - v_j) = " << to_string(res.minus_difference) << "; ";
  }
  res.passed = ok;
  res.detail = why.str();
  return res;
}

// ---------------------------------------------------------------------------
// Chart elimination

/// A Laurent monomial in the arrow variables.
using LaurentExp = std::vector<int>;

struct ChartElimination {
  int chart = 0;
  std::vector<int> tree;       // arrow ids
  std::pair<int, int> free_pair; // arrow ids of y_{2j+1}, y_{2j+2}
  std::vector<int> designated; // elimination order
  std::map<int, int> solved_by; // designated var -> index into J
  std::map<int, LaurentExp> expression; // every variable -> monomial in tree and free
  bool stalled = false;
  std::string stall_state;
  bool expressed_in_tree_and_free = false;
  bool laurent_kills_relations = false;
  std::optional<bool> groebner_agrees; // unset when skipped
  std::string detail;

  [[nodiscard]] auto passed() const -> bool {
    return !stalled && expressed_in_tree_and_free && laurent_kills_relations &&
           groebner_agrees.value_or(true);
  }
};

inline auto format_laurent(const LaurentExp &e) -> std::string {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += "y" + std::to_string(k + 1);
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

/// Designated variables in the order of the two stages.
inline auto elimination_order(int j, const SpecialQuiver &sq) -> std::vector<int> {
  const int ell = sq.ell();
  auto xy_with_tail = [&](int i, bool by_x) {
    std::vector<int> ids;
    for (int id : sq.xy_arrows())
      if (sq.quiver.arrow(id).tail == i) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [&](int l, int r) {
      const auto &ml = sq.quiver.arrow(l).mon, &mr = sq.quiver.arrow(r).mon;
      return by_x ? std::tie(ml.b, l) < std::tie(mr.b, r) : std::tie(ml.c, l) < std::tie(mr.c, r);
    });
    return ids;
  };
  std::vector<int> order;
  for (int i = 1; i <= j; ++i) {
    order.push_back(y_arrow_number(i - 1) - 1); // a_{2i}
    for (int id : xy_with_tail(i, true)) order.push_back(id);
  }
  for (int i = ell; i >= j + 1; --i) {
    order.push_back(x_arrow_number(i + 1) - 1); // a_{2i+1}
    for (int id : xy_with_tail(i, false)) order.push_back(id);
  }
  return order;
}

struct ChartEliminationOptions {
  bool groebner_crosscheck = true;
};

inline auto chart_elimination(int j, const SpecialQuiver &sq, const BinomialIdeal &J,
                              const ChartEliminationOptions &opt = {}) -> ChartElimination {
  const int N = sq.arrow_count(), ell = sq.ell();
  ChartElimination ce;
  ce.chart = j;
  ce.tree = expected_tree(j, ell);
  ce.free_pair = {2 * j, 2 * j + 1};
  ce.designated = elimination_order(j, sq);

  enum class Role { Tree, Free, Designated };
  std::vector<Role> role(N, Role::Designated);
  for (int id : ce.tree) role[id] = Role::Tree;
  role[ce.free_pair.first] = role[ce.free_pair.second] = Role::Free;
  std::vector<int> pos(N, -1);
  for (std::size_t k = 0; k < ce.designated.size(); ++k) pos[ce.designated[k]] = static_cast<int>(k);
  {
    std::ostringstream why;
    for (int v = 0; v < N; ++v)
      if (role[v] == Role::Designated && pos[v] < 0) why << "y" << v + 1 << " is never designated; ";
    for (int v : ce.designated)
      if (role[v] != Role::Designated) why << "y" << v + 1 << " designated twice; ";
    if (!why.str().empty()) {
      ce.stalled = true;
      ce.stall_state = why.str();
      return ce;
    }
  }

  auto unit = [&](int v) {
    LaurentExp e(N, 0);
    e[v] = 1;
    return e;
  };
  for (int v = 0; v < N; ++v)
    if (role[v] != Role::Designated) ce.expression[v] = unit(v);

  // Solve each designated variable from the first relation of Lambda in
  // which it occurs linearly on one side with a unit cofactor.
  for (int v : ce.designated) {
    bool done = false;
    for (std::size_t r = 0; r < J.binomials.size() && !done; ++r) {
      for (int flip = 0; flip < 2 && !done; ++flip) {
        const auto &side = flip ? J.binomials[r].second : J.binomials[r].first;
        const auto &other = flip ? J.binomials[r].first : J.binomials[r].second;
        if (side[v] != 1 || other[v] != 0) continue;
        bool ok = true;
        for (int w = 0; w < N && ok; ++w) {
          if (w != v && side[w] != 0 && role[w] != Role::Tree) ok = false;
          if (other[w] != 0 && role[w] == Role::Designated && pos[w] <= pos[v]) ok = false;
        }
        if (!ok) continue;
        LaurentExp e(N, 0);
        for (int w = 0; w < N; ++w) e[w] = other[w] - (w == v ? 0 : side[w]);
        ce.expression[v] = e;
        ce.solved_by[v] = static_cast<int>(r);
        done = true;
      }
    }
    if (!done) {
      std::ostringstream st;
      st << "chart " << j << ": no relation solves y" << v + 1 << "; solved so far:";
      for (const auto &[w, e] : ce.expression)
        if (role[w] == Role::Designated) st << " y" << w + 1 << " = " << format_laurent(e) << ";";
      st << " tree:";
      for (int id : ce.tree) st << " y" << id + 1;
      st << "; free: y" << ce.free_pair.first + 1 << ", y" << ce.free_pair.second + 1;
      ce.stalled = true;
      ce.stall_state = st.str();
      return ce;
    }
  }

  // Back-substitute: every expression only refers to later designated variables.
  for (auto it = ce.designated.rbegin(); it != ce.designated.rend(); ++it) {
    auto &e = ce.expression[*it];
    LaurentExp out(N, 0);
    for (int w = 0; w < N; ++w) {
      if (e[w] == 0) continue;
      if (role[w] == Role::Designated) {
        const auto &sub = ce.expression.at(w);
        for (int k = 0; k < N; ++k) out[k] += e[w] * sub[k];
      } else {
        out[w] += e[w];
      }
    }
    e = out;
  }

  std::ostringstream why;
  ce.expressed_in_tree_and_free = true;
  for (int v : ce.designated) {
    const auto &e = ce.expression[v];
    for (int w = 0; w < N; ++w) {
      if (e[w] == 0) continue;
      if (role[w] == Role::Designated || (role[w] == Role::Free && e[w] < 0)) {
        ce.expressed_in_tree_and_free = false;
        why << "y" << v + 1 << " = " << format_laurent(e) << "; ";
        break;
      }
    }
  }

  auto phi = [&](const Exponent &u) {
    LaurentExp out(N, 0);
    for (int w = 0; w < N; ++w)
      if (u[w] != 0)
        for (int k = 0; k < N; ++k) out[k] += u[w] * ce.expression[w][k];
    return out;
  };
  ce.laurent_kills_relations = true;
  for (const auto &[u, v] : J.binomials)
    if (phi(u) != phi(v)) {
      ce.laurent_kills_relations = false;
      why << "relation not killed by the substitution; ";
    }

  if (opt.groebner_crosscheck && ce.expressed_in_tree_and_free) {
    // J + (t y_T - 1) with t and the eliminated variables above tree and free.
    std::vector<int> first{N};
    for (int v : ce.designated) first.push_back(v);
    auto ord = MonomialOrder::elimination(N + 1, first);
    std::vector<Binomial> gens;
    for (const auto &[u, v] : J.binomials)
      gens.push_back(Binomial::make(detail::with_extra(u), detail::with_extra(v), ord));
    Exponent ty(N + 1, 0);
    ty[N] = 1;
    for (int id : ce.tree) ++ty[id];
    gens.push_back(Binomial::make(ty, Exponent(N + 1, 0), ord));
    auto gb = groebner_basis(gens, ord);
    bool agrees = true;
    for (int v : ce.designated) {
      Exponent lhs(N + 1, 0), rhs(N + 1, 0);
      lhs[v] = 1;
      for (int w = 0; w < N; ++w) {
        int e = ce.expression[v][w];
        if (e > 0) rhs[w] = e;
        if (e < 0) lhs[w] = -e;
      }
      if (!gb.contains(Binomial::make(lhs, rhs, ord))) {
        agrees = false;
        why << "y" << v + 1 << " relation not in the localization; ";
      }
    }
    for (const auto &g : gb.basis) {
      bool inside = true;
      for (int w = 0; w <= N && inside; ++w)
        if ((g.lead[w] || g.tail[w]) && (w == N || role[w] == Role::Designated)) inside = false;
      if (inside) {
        agrees = false;
        why << "relation among tree and free variables; ";
        break;
      }
    }
    ce.groebner_agrees = agrees;
  }
  ce.detail = why.str();
  return ce;
}

// ---------------------------------------------------------------------------
// Main theorem and K-theory

struct MainTheoremOptions {
  int groebner_saturation_max_arrows = 12;
  int groebner_chart_max_arrows = 14;
  int exhaustive_stability_max_ell = 3;
};

/// ker W = ker pi for the exponent matrix W of a chart substitution.
inline auto same_kernel(const IntegerMatrix &A, const IntegerMatrix &B) -> bool {
  auto ka = kernel_lattice(A), kb = kernel_lattice(B);
  if (ka.size() != kb.size()) return false;
  auto killed = [](const IntegerMatrix &M, const std::vector<IntVector> &basis) {
    for (const auto &v : basis) {
      auto img = M * v;
      if (std::any_of(img.begin(), img.end(), [](const Integer &x) { return x != 0; })) return false;
    }
    return true;
  };
  return killed(A, kb) && killed(B, ka);
}

inline auto substitution_matrix(const ChartElimination &ce, int N) -> IntegerMatrix {
  IntegerMatrix W(N, N);
  for (int v = 0; v < N; ++v)
    for (int k = 0; k < N; ++k) W(k, v) = ce.expression.at(v)[k];
  return W;
}

inline auto main_theorem_check(const GroupType &g, const MainTheoremOptions &opt = {}) -> Report {
  Report rep;
  rep.group = g;
  auto rd = resolution_data(g);
  auto sq = build_special_quiver(g, rd);
  const int N = sq.arrow_count();
  auto W = weight_matrix(sq);
  auto J = relation_ideal(sq);
  const bool vacuous = rd.ell == 0;

  Claim containment{"relations_in_toric_ideal", "J is contained in I_Q", true, vacuous, "", {}};
  for (const auto &[u, v] : J.binomials)
    if (!in_kernel(W, u, v)) {
      containment.passed = false;
      containment.detail += "binomial outside ker(pi); ";
    }
  rep.claims.push_back(containment);

  Claim charts{"chart_elimination", "every chart localization of k[y]/J is k[y_T^{+-1}][y_{2j+1}, y_{2j+2}]",
               true, vacuous, "", {}};
  std::vector<ChartElimination> elims;
  ChartEliminationOptions eopt;
  eopt.groebner_crosscheck = N <= opt.groebner_chart_max_arrows;
  if (!vacuous) {
    for (int j = 0; j <= rd.ell; ++j) {
      auto ce = chart_elimination(j, sq, J, eopt);
      Claim c{"chart_" + std::to_string(j),
              "free pair {y" + std::to_string(2 * j + 1) + ", y" + std::to_string(2 * j + 2) + "}",
              ce.passed(), false, ce.stalled ? ce.stall_state : ce.detail, {}};
      if (!ce.groebner_agrees) c.detail += "Groebner cross-check skipped; ";
      charts.passed = charts.passed && c.passed;
      charts.children.push_back(std::move(c));
      elims.push_back(std::move(ce));
    }
  }
  rep.claims.push_back(charts);

  Claim sat{"saturation_equality", "J : B_Q^infinity = I_Q : B_Q^infinity", false, vacuous, "", {}};
  if (vacuous) {
    sat.passed = true;
    sat.detail = "trivial group: J and I_Q are both zero";
  } else if (N <= opt.groebner_saturation_max_arrows) {
    auto IQ = toric_ideal(W);
    auto B = irrelevant_ideal(sq);
    sat.passed = ideal_equal(ideal_saturation(J, B).ideal, ideal_saturation(IQ, B).ideal);
    sat.detail = "Groebner bases";
  } else if (charts.passed) {
    sat.passed = true;
    for (const auto &ce : elims)
      if (!same_kernel(substitution_matrix(ce, N), W)) {
        sat.passed = false;
        sat.detail += "chart " + std::to_string(ce.chart) + ": substitution kernel differs from ker(pi); ";
      }
    if (sat.passed) sat.detail = "each chart substitution has kernel ker(pi)";
  } else {
    sat.detail = "needs the chart eliminations, which failed";
  }
  rep.claims.push_back(sat);

  auto theta = canonical_weight(sq.vertex_count());
  auto ss = semistable_equals_stable(sq.quiver, theta, opt.exhaustive_stability_max_ell + 1);
  rep.claims.push_back({"semistable_equals_stable", "every theta-semistable representation is theta-stable",
                        ss.equal, false, ss.method, {}});
  return rep;
}

inline auto k_theory_shadow(const GroupType &g) -> Report {
  Report rep;
  rep.group = g;
  auto rd = resolution_data(g);
  auto sq = build_special_quiver(g, rd);
  auto specials = special_characters(g, rd);
  bool counts = sq.vertex_count() == rd.ell + 1 &&
                static_cast<int>(specials.size()) + 1 == sq.vertex_count();
  rep.claims.push_back({"vertex_count", "|Q_0| = ell + 1 = number of special representations + 1", counts,
                        false,
                        std::to_string(sq.vertex_count()) + " vertices, " + std::to_string(rd.ell) +
                            " exceptional curves, " + std::to_string(specials.size()) + " specials",
                        {}});
  bool identity = true;
  for (int i = 1; i <= rd.ell; ++i) {
    auto cls = pic_class(bundle_divisor(i, rd), rd);
    for (int j = 1; j <= rd.ell; ++j)
      if (cls.cls[j - 1] != (i == j ? 1 : 0)) identity = false;
  }
  rep.claims.push_back({"degree_matrix", "deg(L_i|D_j) is the identity matrix", identity, rd.ell == 0, "", {}});
  return rep;
}

} // namespace qforge
