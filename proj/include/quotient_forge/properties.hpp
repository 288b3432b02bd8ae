#pragma once

// Structural properties of the special quiver checked group by group, used
// by the property sweep.

#include "quotient_forge/moduli_verify.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace qforge {

struct PropertyOptions {
  int hom_degree_factor = 3;      // paths versus sections up to degree factor * r
  int groebner_chart_max_arrows = 14;
  int exhaustive_stability_max_ell = 3;
};

namespace detail {

/// Runs `body`; a thrown error becomes a failed claim with its message.
inline auto guarded_claim(std::string name, std::string statement, const std::function<std::string()> &body)
    -> Claim {
  Claim c{std::move(name), std::move(statement), false, false, "", {}};
  try {
    c.detail = body();
    c.passed = c.detail.empty();
  } catch (const std::exception &e) {
    c.detail = e.what();
  }
  return c;
}

/// For every vertex pair (i, j): a monomial of degree <= D is the label of a
/// path i -> j exactly when it is a section of Hom(L_i, L_j).
inline auto hom_path_mismatch(const SpecialQuiver &sq, int D) -> std::string {
  const auto &g = sq.group;
  const int n = sq.vertex_count(), side = D + 1;
  auto idx = [&](int v, int b, int c) { return (static_cast<std::size_t>(v) * side + b) * side + c; };
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = char_of(x_pow(sq.rd.alpha(v)), g).idx;
  std::vector<char> reach(static_cast<std::size_t>(n) * side * side);
  for (int i = 0; i < n; ++i) {
    std::fill(reach.begin(), reach.end(), 0);
    reach[idx(i, 0, 0)] = 1;
    for (int d = 1; d <= D; ++d)
      for (int b = 0; b <= d; ++b) {
        const int c = d - b;
        for (const auto &a : sq.quiver.arrows())
          if (a.mon.b <= b && a.mon.c <= c && reach[idx(a.tail, b - a.mon.b, c - a.mon.c)])
            reach[idx(a.head, b, c)] = 1;
      }
    for (int j = 0; j < n; ++j)
      for (int b = 0; b <= D; ++b)
        for (int c = 0; b + c <= D; ++c) {
          bool section = (deg[i] + char_of({b, c}, g).idx) % g.r == deg[j];
          if ((reach[idx(j, b, c)] != 0) != section)
            return std::to_string(i) + " -> " + std::to_string(j) + " at " + to_string(PlaneMonomial{b, c});
        }
  }
  return {};
}

} // namespace detail

inline auto property_check(const GroupType &g, const PropertyOptions &opt = {}) -> Report {
  Report rep;
  rep.group = g;
  auto rd = resolution_data(g);
  auto sq = build_special_quiver(g, rd);
  const int n = sq.vertex_count(), ell = rd.ell;
  const auto &q = sq.quiver;

  rep.claims.push_back(detail::guarded_claim("ray_recursion", "v_{i-1} + v_{i+1} = c_i v_i", [&] {
    check_resolution_invariants(rd);
    return std::string{};
  }));

  rep.claims.push_back(detail::guarded_claim("arrow_structure", "x-, y- and xy-arrows as in the closed form", [&] {
    std::string bad;
    for (int i = 1; i <= ell + 1; ++i) {
      const auto &x = sq.a(x_arrow_number(i));
      if (x.tail != i - 1 || x.head != i % n || x.mon != x_pow(rd.alpha(i) - rd.alpha(i - 1)))
        bad += "x-arrow " + std::to_string(i) + "; ";
    }
    for (int i = 0; i <= ell; ++i) {
      const auto &y = sq.a(y_arrow_number(i));
      if (y.tail != (i + 1) % n || y.head != i || y.mon != y_pow(rd.beta(i) - rd.beta(i + 1)))
        bad += "y-arrow " + std::to_string(i) + "; ";
    }
    for (int id : sq.xy_arrows()) {
      const auto &a = q.arrow(id);
      if (a.head != 0 || a.mon.b == 0 || a.mon.c == 0) bad += "xy-arrow a" + std::to_string(id + 1) + "; ";
    }
    for (int v = 1; v < n; ++v)
      if (q.arrows_in(v).size() != 2) bad += "in-degree at " + std::to_string(v) + "; ";
    return bad;
  }));

  rep.claims.push_back(detail::guarded_claim("degree_matrix", "deg(L_i|D_j) = delta_ij", [&] {
    auto M = degree_matrix(preferred_bundles(rd));
    for (int i = 0; i < ell; ++i)
      for (int j = 0; j < ell; ++j)
        if (M[i][j] != (i == j ? 1 : 0)) return "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
    return std::string{};
  }));

  rep.claims.push_back(detail::guarded_claim("special_criteria", "two generators over R^G iff a ray degree", [&] {
    auto s = special_characters(g, rd);
    return static_cast<int>(s.size()) == ell ? std::string{} : std::string("wrong count");
  }));

  rep.claims.push_back(detail::guarded_claim("ghilb_charts", "one standard monomial per character on every chart", [&] {
    for (int j = 0; j <= ell; ++j) {
      if (static_cast<int>(ghilb_standard_monomials(j, rd).size()) != g.r)
        return "chart " + std::to_string(j) + " has the wrong length";
      for (int rho = 0; rho < g.r; ++rho) (void)ghilb_chart_monomial(j, Character{rho}, rd);
    }
    return std::string{};
  }));

  rep.claims.push_back(detail::guarded_claim("section_divisors", "labels are effective and add along paths", [&] {
    std::string bad;
    for (const auto &a : q.arrows()) {
      if (!a.cox || !a.cox->effective()) bad += "a" + std::to_string(a.id + 1) + " not effective; ";
      for (int id : q.arrows_out(a.head)) {
        const auto &b = q.arrow(id);
        if (section_divisor(a.mon * b.mon, a.tail, rd) != *a.cox + *b.cox)
          bad += "a" + std::to_string(a.id + 1) + " a" + std::to_string(b.id + 1) + "; ";
      }
    }
    return bad;
  }));

  rep.claims.push_back(detail::guarded_claim(
      "hom_paths", "paths realise every section up to degree " + std::to_string(opt.hom_degree_factor) + "r",
      [&] { return detail::hom_path_mismatch(sq, opt.hom_degree_factor * g.r); }));

  rep.claims.push_back(detail::guarded_claim("spanning_trees", "exactly ell + 1 spanning trees, namely T_0..T_ell", [&] {
    auto trees = spanning_trees(q);
    std::set<std::vector<int>> got(trees.begin(), trees.end()), want;
    for (int j = 0; j <= ell; ++j) want.insert(expected_tree(j, ell));
    if (trees.size() != want.size()) return std::to_string(trees.size()) + " trees";
    return got == want ? std::string{} : std::string("tree sets differ");
  }));

  auto W = weight_matrix(sq);
  auto J = relation_ideal(sq);
  rep.claims.push_back(detail::guarded_claim("relations_in_kernel", "J is contained in ker(pi)", [&] {
    for (const auto &[u, v] : J.binomials)
      if (!in_kernel(W, u, v)) return std::string("binomial outside ker(pi)");
    return std::string{};
  }));

  Claim charts = detail::guarded_claim("chart_free_pairs", "every chart eliminates to its free pair", [&] {
    std::string bad;
    if (ell == 0) return bad;
    ChartEliminationOptions eopt;
    eopt.groebner_crosscheck = sq.arrow_count() <= opt.groebner_chart_max_arrows;
    for (int j = 0; j <= ell; ++j) {
      auto ce = chart_elimination(j, sq, J, eopt);
      if (!ce.passed() || ce.free_pair != std::make_pair(2 * j, 2 * j + 1))
        bad += "chart " + std::to_string(j) + ": " + (ce.stalled ? ce.stall_state : ce.detail) + "; ";
    }
    return bad;
  });
  charts.vacuous = ell == 0;
  rep.claims.push_back(std::move(charts));

  rep.claims.push_back(detail::guarded_claim("semistable_equals_stable", "theta-semistable implies theta-stable", [&] {
    auto ss = semistable_equals_stable(q, canonical_weight(n), opt.exhaustive_stability_max_ell + 1);
    return ss.equal ? std::string{} : ss.method;
  }));
  return rep;
}

/// Applies `check` to every group on `workers` threads (0: one per core).
/// Results keep the order of `groups`.
template <class Check>
auto parallel_sweep(const std::vector<GroupType> &groups, Check check, unsigned workers = 0) -> std::vector<Report> {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(groups.size(), 1)));
  std::vector<Report> out(groups.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t k; (k = next++) < groups.size();) {
      if (failed) return;
      try {
        out[k] = check(groups[k]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto &t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

} // namespace qforge
