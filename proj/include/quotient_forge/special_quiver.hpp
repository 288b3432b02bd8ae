#pragma once

// The bound Special McKay quiver: arrows, their classification and
// numbering, lifting of McKay paths, primitive cycles and the relations
// Lambda.

#include "quotient_forge/mckay_quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <string>
#include <vector>

namespace qforge {

enum class ArrowKind { X, Y, XY };

inline auto to_string(ArrowKind k) -> std::string {
  switch (k) {
  case ArrowKind::X: return "x";
  case ArrowKind::Y: return "y";
  case ArrowKind::XY: return "xy";
  }
  return "?";
}

/// Arrow a_n has id n - 1.
struct SpecialQuiver {
  GroupType group;
  ResolutionData rd;
  LabelledQuiver quiver;
  std::vector<ArrowKind> kind; // by arrow id

  [[nodiscard]] auto ell() const -> int { return rd.ell; }
  [[nodiscard]] auto vertex_count() const -> int { return rd.ell + 1; }
  [[nodiscard]] auto arrow_count() const -> int { return quiver.arrow_count(); }
  [[nodiscard]] auto a(int n) const -> const Arrow & { return quiver.arrow(n - 1); }
  [[nodiscard]] auto xy_arrows() const -> std::vector<int> {
    std::vector<int> out;
    for (int id = 0; id < arrow_count(); ++id)
      if (kind[id] == ArrowKind::XY) out.push_back(id);
    return out;
  }
  friend auto operator==(const SpecialQuiver &, const SpecialQuiver &) -> bool = default;
  /// Vertex of the McKay quiver corresponding to vertex i.
  [[nodiscard]] auto iota(int i) const -> int {
    return bundle_of_degree(char_of(x_pow(rd.alpha(i)), group), group);
  }
};

/// Number n of the x-arrow a_{2i-1}, 1 <= i <= ell+1.
inline auto x_arrow_number(int i) -> int { return 2 * i - 1; }
/// Number n of the y-arrow a_{2i+2}, 0 <= i <= ell.
inline auto y_arrow_number(int i) -> int { return 2 * i + 2; }

inline auto special_vertex_degrees(const ResolutionData &rd) -> std::vector<int> {
  std::vector<int> deg;
  for (int i = 0; i <= rd.ell; ++i) deg.push_back(char_of(x_pow(rd.alpha(i)), rd.group).idx);
  return deg;
}

inline auto irreducible_sections(int i, int j, const ResolutionData &rd)
    -> std::vector<PlaneMonomial> {
  return irreducible_sections(i, j, special_vertex_degrees(rd), rd.group);
}

inline auto build_special_quiver(const GroupType &g, const ResolutionData &rd) -> SpecialQuiver {
  const int ell = rd.ell, n = ell + 1;
  auto degrees = special_vertex_degrees(rd);
  std::vector<SectionArrow> sections;
  for (int v = 0; v < n; ++v) {
    auto out = irreducible_sections_from(v, degrees, g);
    sections.insert(sections.end(), out.begin(), out.end());
  }
  auto fail = [&](const std::string &what) {
    throw StructuralError("special quiver of " + to_string(g) + ": " + what);
  };

  std::vector<SectionArrow> numbered(2 * n);
  std::vector<char> used(sections.size(), 0);
  auto claim = [&](int slot, int tail, int head, PlaneMonomial mon) {
    int hits = 0;
    for (std::size_t s = 0; s < sections.size(); ++s)
      if (sections[s].tail == tail && sections[s].head == head && sections[s].mon == mon) {
        used[s] = 1;
        ++hits;
      }
    if (hits != 1)
      fail("expected arrow a_" + std::to_string(slot + 1) + " = " + to_string(mon) + " from " +
           std::to_string(tail) + " to " + std::to_string(head));
    numbered[slot] = {tail, head, mon};
  };
  for (int i = 1; i <= ell + 1; ++i)
    claim(x_arrow_number(i) - 1, i - 1, i % n, x_pow(rd.alpha(i) - rd.alpha(i - 1)));
  for (int i = 0; i <= ell; ++i)
    claim(y_arrow_number(i) - 1, (i + 1) % n, i, y_pow(rd.beta(i) - rd.beta(i + 1)));

  std::vector<SectionArrow> xy;
  for (std::size_t s = 0; s < sections.size(); ++s) {
    if (used[s]) continue;
    const auto &sec = sections[s];
    if (sec.mon.b == 0 || sec.mon.c == 0)
      fail("unexpected pure power arrow " + to_string(sec.mon) + " from " +
           std::to_string(sec.tail));
    if (sec.head != 0)
      fail("xy-arrow " + to_string(sec.mon) + " with head " + std::to_string(sec.head));
    xy.push_back(sec);
  }
  std::sort(xy.begin(), xy.end(), [](const SectionArrow &l, const SectionArrow &r) {
    return std::tie(l.tail, l.mon.c) < std::tie(r.tail, r.mon.c);
  });

  SpecialQuiver sq{g, rd, LabelledQuiver(n), {}};
  auto add = [&](const SectionArrow &s, ArrowKind k) {
    int id = sq.quiver.arrow_count();
    sq.quiver.add_arrow({id, s.tail, s.head, s.mon, section_divisor(s.mon, s.tail, rd)});
    sq.kind.push_back(k);
  };
  for (int slot = 0; slot < 2 * n; ++slot)
    add(numbered[slot], slot % 2 == 0 ? ArrowKind::X : ArrowKind::Y);
  for (const auto &s : xy) add(s, ArrowKind::XY);

  for (int v = 1; v < n; ++v)
    if (sq.quiver.arrows_in(v).size() != 2)
      fail("vertex " + std::to_string(v) + " has " +
           std::to_string(sq.quiver.arrows_in(v).size()) + " incoming arrows");
  if (!sq.quiver.connected()) fail("not connected");
  return sq;
}

inline auto build_special_quiver(const GroupType &g) -> SpecialQuiver {
  return build_special_quiver(g, resolution_data(g));
}

/// Arrow multisets of Q and Q' agree once vertex i of Q is read as iota(i).
inline auto label_isomorphic_to_mckay(const SpecialQuiver &sq, const BoundQuiver &mq) -> bool {
  if (sq.vertex_count() != mq.quiver.vertex_count() || sq.arrow_count() != mq.quiver.arrow_count())
    return false;
  using Key = std::tuple<int, int, PlaneMonomial, std::optional<CoxVector>>;
  std::vector<Key> l, r;
  for (const auto &a : sq.quiver.arrows()) l.emplace_back(sq.iota(a.tail), sq.iota(a.head), a.mon, a.cox);
  for (const auto &a : mq.quiver.arrows()) r.emplace_back(a.tail, a.head, a.mon, a.cox);
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return l == r;
}

/// Cuts the McKay walk from iota(start) at every special vertex and
/// replaces each segment by the unique arrow of Q with its endpoints and
/// monomial.
inline auto lift_to_special(int start, const std::string &word, const SpecialQuiver &sq) -> Path {
  const auto &g = sq.group;
  std::map<int, int> special_at;
  for (int i = 0; i < sq.vertex_count(); ++i) special_at[sq.iota(i)] = i;
  Path out;
  int cur = start, sigma = sq.iota(start);
  PlaneMonomial seg;
  for (char c : word) {
    if (c != 'x' && c != 'y') throw RangeViolation("step letters are x and y");
    sigma = mckay_step(sigma, c, g);
    seg = seg * (c == 'x' ? x_pow(1) : y_pow(1));
    auto it = special_at.find(sigma);
    if (it == special_at.end()) continue;
    int found = -1, hits = 0;
    for (const auto &a : sq.quiver.arrows())
      if (a.tail == cur && a.head == it->second && a.mon == seg) {
        found = a.id;
        ++hits;
      }
    if (hits != 1)
      throw StructuralError("lift: segment " + to_string(seg) + " from " + std::to_string(cur) +
                            " to " + std::to_string(it->second) + " matches " +
                            std::to_string(hits) + " arrows");
    out.push_back(found);
    cur = it->second;
    seg = PlaneMonomial{};
  }
  if (!seg.is_one()) throw StructuralError("lift: walk does not end at a special vertex");
  return out;
}

enum class CycleCase { XArrow, YArrow, XYViaX, XYViaY };

inline auto to_string(CycleCase c) -> std::string {
  switch (c) {
  case CycleCase::XArrow: return "1";
  case CycleCase::YArrow: return "2";
  case CycleCase::XYViaX: return "3.i";
  case CycleCase::XYViaY: return "3.ii";
  }
  return "?";
}

struct PrimitiveCycle {
  Path path;
  int base = 0;
  PlaneMonomial mon;
  Path partner; // the cycle through the arrow itself; partner - path lies in R
};

inline auto primitive_cycle_for(int arrow_id, CycleCase variant, const SpecialQuiver &sq,
                                const std::vector<PlaneMonomial> &invariant_gens) -> PrimitiveCycle {
  const auto &a = sq.quiver.arrow(arrow_id);
  const int i = a.tail, ell = sq.ell();
  const int n_arrow = arrow_id + 1;
  auto fail = [&](const std::string &what) {
    throw StructuralError("primitive cycle for a_" + std::to_string(n_arrow) + " (case " +
                          to_string(variant) + "): " + what);
  };
  if (i == 0) fail("tail is 0");
  auto id = [](int n) { return n - 1; };

  Path partner;
  std::vector<int> excluded;
  std::string word;
  switch (variant) {
  case CycleCase::XArrow: {
    if (n_arrow != x_arrow_number(i + 1)) fail("not the x-arrow a_{2i+1}");
    partner = {id(2 * i + 1), id(2 * i + 2)};
    excluded = partner;
    auto m = sq.quiver.path_mon(partner);
    word = std::string(m.c, 'y') + std::string(m.b, 'x');
    break;
  }
  case CycleCase::YArrow: {
    if (n_arrow != 2 * i) fail("not the y-arrow a_{2i}");
    partner = {id(2 * i), id(2 * i - 1)};
    excluded = partner;
    auto m = sq.quiver.path_mon(partner);
    word = std::string(m.b, 'x') + std::string(m.c, 'y');
    break;
  }
  case CycleCase::XYViaX: {
    if (sq.kind[arrow_id] != ArrowKind::XY) fail("not an xy-arrow");
    partner = {arrow_id};
    for (int k = 1; k <= i; ++k) partner.push_back(id(2 * k - 1));
    excluded = partner;
    auto m = sq.quiver.path_mon(partner);
    word = std::string(m.b, 'x') + std::string(m.c, 'y');
    break;
  }
  case CycleCase::XYViaY: {
    if (sq.kind[arrow_id] != ArrowKind::XY) fail("not an xy-arrow");
    partner = {arrow_id};
    for (int k = ell; k >= i; --k) partner.push_back(id(2 * k + 2));
    excluded = partner;
    auto m = sq.quiver.path_mon(partner);
    word = std::string(m.c, 'y') + std::string(m.b, 'x');
    break;
  }
  }
  sq.quiver.check_path(partner);
  if (sq.quiver.path_tail(partner) != i || sq.quiver.path_head(partner) != i)
    fail("partner is not a cycle at the tail");

  PrimitiveCycle pc;
  pc.base = i;
  pc.partner = partner;
  pc.path = lift_to_special(i, word, sq);
  pc.mon = sq.quiver.path_mon(pc.path);
  if (sq.quiver.path_head(pc.path, i) != i) fail("lift is not a cycle");
  if (std::find(invariant_gens.begin(), invariant_gens.end(), pc.mon) == invariant_gens.end())
    fail("monomial " + to_string(pc.mon) + " is not a minimal invariant");
  for (int e : excluded)
    if (std::find(pc.path.begin(), pc.path.end(), e) != pc.path.end())
      fail("a_" + std::to_string(e + 1) + " lies in the support");
  return pc;
}

/// Exponent vector of y_p over the arrow variables, counted with
/// multiplicity.
inline auto path_exponent(const Path &p, int num_vars) -> std::vector<int> {
  std::vector<int> e(num_vars, 0);
  for (int id : p) ++e.at(id);
  return e;
}

struct LambdaEntry {
  int arrow = 0; // id
  CycleCase variant = CycleCase::XArrow;
  PathPair relation; // (partner, primitive cycle)
};

/// Every relation of Lambda in generation order, duplicates included.
inline auto lambda_entries(const SpecialQuiver &sq) -> std::vector<LambdaEntry> {
  std::vector<LambdaEntry> out;
  if (sq.ell() == 0) {
    out.push_back({0, CycleCase::XArrow, {{0, 1}, {1, 0}}});
    return out;
  }
  auto gens = invariant_generators(sq.group, sq.rd);
  for (int i = 1; i <= sq.ell(); ++i)
    for (int id : sq.quiver.arrows_out(i)) {
      std::vector<CycleCase> cases;
      switch (sq.kind[id]) {
      case ArrowKind::X: cases = {CycleCase::XArrow}; break;
      case ArrowKind::Y: cases = {CycleCase::YArrow}; break;
      case ArrowKind::XY: cases = {CycleCase::XYViaX, CycleCase::XYViaY}; break;
      }
      for (auto c : cases) {
        auto pc = primitive_cycle_for(id, c, sq, gens);
        out.push_back({id, c, {pc.partner, pc.path}});
      }
    }
  return out;
}

/// Lambda with relations giving the same binomial (up to sign) removed; the
/// first occurrence is kept.
inline auto lambda_relations(const SpecialQuiver &sq) -> RelationSet {
  RelationSet rel;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const auto &e : lambda_entries(sq)) {
    auto u = path_exponent(e.relation.p, sq.arrow_count());
    auto v = path_exponent(e.relation.q, sq.arrow_count());
    // Only the commuting loops of the trivial group give a zero binomial.
    if (u == v && sq.ell() != 0) throw StructuralError("relation with identical sides");
    if (v < u) std::swap(u, v);
    if (seen.insert({u, v}).second) rel.pairs.push_back(e.relation);
  }
  check_relations(sq.quiver, rel);
  return rel;
}

} // namespace qforge
