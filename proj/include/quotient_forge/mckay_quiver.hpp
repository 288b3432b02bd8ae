#pragma once

// The bound McKay quiver, G-Hilbert chart monomials and special characters.
//
// Vertex sigma of the McKay quiver is the tautological bundle W_sigma. Its
// sections have degree sigma* = -sigma. contragredient() is the only place
// this star is applied.

#include "quotient_forge/sections.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace qforge {

inline auto contragredient(Character rho, const GroupType &g) -> Character {
  return {mod(-static_cast<std::int64_t>(rho.idx), g.r)};
}

/// McKay vertex whose generating sections have degree rho.
inline auto bundle_of_degree(Character rho, const GroupType &g) -> int {
  return contragredient(rho, g).idx;
}

inline auto degree_of_bundle(int vertex, const GroupType &g) -> Character {
  return contragredient(Character{vertex}, g);
}

struct BoundQuiver {
  LabelledQuiver quiver;
  RelationSet relations;
  friend auto operator==(const BoundQuiver &, const BoundQuiver &) -> bool = default;
};

/// a_1^rho has id 2 rho, a_2^rho has id 2 rho + 1.
inline auto mckay_x_arrow(int rho) -> int { return 2 * rho; }
inline auto mckay_y_arrow(int rho) -> int { return 2 * rho + 1; }

/// Head of the step labelled `letter` ('x' or 'y') out of vertex sigma.
inline auto mckay_step(int sigma, char letter, const GroupType &g) -> int {
  int shift = letter == 'x' ? 1 : g.a;
  if (g.r == 1) return 0;
  return mod(static_cast<std::int64_t>(sigma) - shift, g.r);
}

/// The standard monomials of I_j = (x^{alpha_{j+1}}, y^{beta_j},
/// x^{alpha_{j+1}-alpha_j} y^{beta_j-beta_{j+1}}).
inline auto ghilb_standard_monomials(int j, const ResolutionData &rd)
    -> std::vector<PlaneMonomial> {
  if (j < 0 || j > rd.ell) throw RangeViolation("chart index out of range");
  const int bx = rd.alpha(j + 1), cy = rd.beta(j);
  const int mb = rd.alpha(j + 1) - rd.alpha(j), mc = rd.beta(j) - rd.beta(j + 1);
  std::vector<PlaneMonomial> out;
  for (int b = 0; b < bx; ++b)
    for (int c = 0; c < cy; ++c)
      if (!(b >= mb && c >= mc)) out.push_back({b, c});
  return out;
}

inline auto ghilb_chart_monomial(int j, Character rho, const ResolutionData &rd)
    -> PlaneMonomial {
  std::vector<PlaneMonomial> hits;
  for (auto m : ghilb_standard_monomials(j, rd))
    if (char_of(m, rd.group) == rho) hits.push_back(m);
  if (hits.size() != 1)
    throw ConsistencyError("chart " + std::to_string(j) + " of " + to_string(rd.group) +
                           " has " + std::to_string(hits.size()) +
                           " standard monomials of character " + std::to_string(rho.idx));
  return hits.front();
}

/// Generators of the tautological bundle W_sigma on the charts U_0..U_ell.
inline auto tautological_chart_generators(int sigma, const ResolutionData &rd)
    -> ChartGenerators {
  ChartGenerators gens;
  for (int j = 0; j <= rd.ell; ++j)
    gens.push_back(ghilb_chart_monomial(j, degree_of_bundle(sigma, rd.group), rd));
  return gens;
}

inline auto build_mckay(const GroupType &g, const ResolutionData &rd) -> BoundQuiver {
  const int r = g.r;
  BoundQuiver bq;
  bq.quiver = LabelledQuiver(r);
  std::vector<ChartGenerators> gens;
  for (int sigma = 0; sigma < r; ++sigma) gens.push_back(tautological_chart_generators(sigma, rd));
  for (int rho = 0; rho < r; ++rho) {
    int tx = mod(rho + 1, r), ty = mod(static_cast<std::int64_t>(rho) + g.a, r);
    bq.quiver.add_arrow({mckay_x_arrow(rho), tx, rho, x_pow(1),
                         section_label(x_pow(1), gens[tx], gens[rho], rd)});
    bq.quiver.add_arrow({mckay_y_arrow(rho), ty, rho, y_pow(1),
                         section_label(y_pow(1), gens[ty], gens[rho], rd)});
  }
  for (int rho = 0; rho < r; ++rho) {
    // a_2^{rho rho_1} a_1^rho versus a_1^{rho rho_2} a_2^rho, both ending at rho.
    bq.relations.pairs.push_back(
        {{mckay_y_arrow(mod(rho + 1, r)), mckay_x_arrow(rho)},
         {mckay_x_arrow(mod(static_cast<std::int64_t>(rho) + g.a, r)), mckay_y_arrow(rho)}});
  }
  check_relations(bq.quiver, bq.relations);
  return bq;
}

inline auto build_mckay(const GroupType &g) -> BoundQuiver {
  return build_mckay(g, resolution_data(g));
}

/// The path from `start` following the letters of `word`.
inline auto mckay_path(int start, const std::string &word, const GroupType &g) -> Path {
  Path p;
  int v = start;
  for (char c : word) {
    if (c != 'x' && c != 'y') throw RangeViolation("step letters are x and y");
    int h = mckay_step(v, c, g);
    p.push_back(c == 'x' ? mckay_x_arrow(h) : mckay_y_arrow(h));
    v = h;
  }
  return p;
}

inline auto mckay_word(const Path &p) -> std::string {
  std::string w;
  for (int id : p) w += (id % 2 == 0) ? 'x' : 'y';
  return w;
}

/// Rewrites every y-step followed by an x-step into the other side of the
/// relation containing it, until all x-steps precede all y-steps.
inline auto mckay_normal_form(const Path &p, const BoundQuiver &mq) -> Path {
  Path cur = p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (cur[k] % 2 == 1 && cur[k + 1] % 2 == 0) {
        bool hit = false;
        for (const auto &rel : mq.relations.pairs)
          if (rel.p[0] == cur[k] && rel.p[1] == cur[k + 1]) {
            cur[k] = rel.q[0];
            cur[k + 1] = rel.q[1];
            hit = true;
            break;
          }
        if (!hit) throw StructuralError("no relation contains a yx step");
        changed = true;
      }
    }
  }
  return cur;
}

/// Number of minimal generators of the module of semi-invariants of degree
/// rho over the invariant ring.
inline auto semi_invariant_generator_count(Character rho, const GroupType &g) -> int {
  auto gens = detail::minimal_monomials(2 * g.r, [&](PlaneMonomial m) {
    return char_of(m, g) == rho;
  });
  return static_cast<int>(gens.size());
}

/// Degrees rho_i = deg(x^{alpha_i}) = deg(y^{beta_i}), i = 1..ell; the
/// special representations are their duals rho_i*.
inline auto special_characters(const GroupType &g, const ResolutionData &rd)
    -> std::vector<Character> {
  std::vector<Character> toric;
  for (int i = 1; i <= rd.ell; ++i) {
    auto cx = char_of(x_pow(rd.alpha(i)), g), cy = char_of(y_pow(rd.beta(i)), g);
    if (cx != cy) throw ConsistencyError("alpha_i != a beta_i mod r at i = " + std::to_string(i));
    toric.push_back(cx);
  }
  std::set<Character> by_count;
  for (int rho = 1; rho < g.r; ++rho)
    if (semi_invariant_generator_count(Character{rho}, g) == 2) by_count.insert(Character{rho});
  std::set<Character> by_rays(toric.begin(), toric.end());
  if (by_rays.size() != toric.size() || by_rays != by_count)
    throw ConsistencyError("special characters: generator count and rays disagree for " +
                           to_string(g));
  return toric;
}

/// Quiver of sections on all tautological bundles W_sigma, sigma = 0..r-1.
inline auto tautological_quiver_of_sections(const ResolutionData &rd) -> LabelledQuiver {
  std::vector<ChartGenerators> bundles;
  for (int sigma = 0; sigma < rd.r(); ++sigma)
    bundles.push_back(tautological_chart_generators(sigma, rd));
  return quiver_of_sections(rd, bundles);
}

/// Arrow multisets agree after forgetting ids.
inline auto same_labelled_arrows(const LabelledQuiver &l, const LabelledQuiver &r) -> bool {
  if (l.vertex_count() != r.vertex_count() || l.arrow_count() != r.arrow_count())
    return false;
  auto key = [](const LabelledQuiver &q) {
    std::vector<std::tuple<int, int, PlaneMonomial, std::optional<CoxVector>>> ks;
    for (const auto &a : q.arrows()) ks.emplace_back(a.tail, a.head, a.mon, a.cox);
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  return key(l) == key(r);
}

} // namespace qforge
