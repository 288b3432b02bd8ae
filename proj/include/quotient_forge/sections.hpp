#pragma once

// Quiver of sections for a list of torus-invariant line bundles, each given
// by its generators on the charts U_0..U_ell.

#include "quotient_forge/quiver.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace qforge {

struct SectionArrow {
  int tail = 0;
  int head = 0;
  PlaneMonomial mon;
};

/// Minimal nontrivial monomials m such that deg(tail) + char(m) is the degree
/// of some vertex. `degrees` must be pairwise distinct.
inline auto irreducible_sections_from(int tail, const std::vector<int> &degrees,
                                      const GroupType &g)
    -> std::vector<SectionArrow> {
  const int r = g.r;
  std::vector<int> vertex_of(r, -1);
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    if (vertex_of[degrees[v]] != -1)
      throw ConsistencyError("quiver of sections: repeated degree");
    vertex_of[degrees[v]] = static_cast<int>(v);
  }
  // Any monomial with b > r or c > r has x^r or y^r as a proper factor.
  auto mins = detail::minimal_monomials(r, [&](PlaneMonomial m) {
    return !m.is_one() &&
           vertex_of[(degrees[tail] + char_of(m, g).idx) % r] != -1;
  });
  std::vector<SectionArrow> out;
  for (auto m : mins)
    out.push_back({tail, vertex_of[(degrees[tail] + char_of(m, g).idx) % r], m});
  return out;
}

inline auto irreducible_sections(int tail, int head,
                                 const std::vector<int> &degrees,
                                 const GroupType &g) -> std::vector<PlaneMonomial> {
  std::vector<PlaneMonomial> out;
  for (const auto &s : irreducible_sections_from(tail, degrees, g))
    if (s.head == head) out.push_back(s.mon);
  std::sort(out.begin(), out.end());
  return out;
}

/// Arrows sorted by (tail, head, mon), ids 0, 1, ... in that order.
inline auto quiver_of_sections(const ResolutionData &rd,
                               const std::vector<ChartGenerators> &bundles)
    -> LabelledQuiver {
  std::vector<int> degrees;
  for (const auto &gens : bundles) degrees.push_back(char_of(gens.at(0), rd.group).idx);
  std::vector<SectionArrow> all;
  for (int v = 0; v < static_cast<int>(bundles.size()); ++v) {
    auto out = irreducible_sections_from(v, degrees, rd.group);
    all.insert(all.end(), out.begin(), out.end());
  }
  std::sort(all.begin(), all.end(), [](const SectionArrow &l, const SectionArrow &r) {
    return std::tie(l.tail, l.head, l.mon) < std::tie(r.tail, r.head, r.mon);
  });
  LabelledQuiver q(static_cast<int>(bundles.size()));
  int id = 0;
  for (const auto &s : all)
    q.add_arrow({id++, s.tail, s.head, s.mon,
                 section_label(s.mon, bundles[s.tail], bundles[s.head], rd)});
  return q;
}

} // namespace qforge
