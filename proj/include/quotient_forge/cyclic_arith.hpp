#pragma once

// Arithmetic of the cyclic group of type 1/r(1,a): characters, the
// Hirzebruch-Jung resolution data and the invariant ring.

#include "quotient_forge/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace qforge {

struct GroupType {
  int r = 1;
  int a = 0;
  friend auto operator<=>(const GroupType &, const GroupType &) = default;
};

inline auto to_string(const GroupType &g) -> std::string {
  return "1/" + std::to_string(g.r) + "(1," + std::to_string(g.a) + ")";
}

inline auto validate_group(int r, int a) -> GroupType {
  if (r < 1)
    throw RangeViolation("group order must be positive, got r = " +
                         std::to_string(r));
  if (r == 1) {
    if (a != 0)
      throw RangeViolation("the trivial group is presented as 1/1(1,0)");
    return {1, 0};
  }
  if (a < 1 || a >= r)
    throw RangeViolation("need 1 <= a < r, got a = " + std::to_string(a) +
                         ", r = " + std::to_string(r));
  if (std::gcd(a, r) != 1)
    throw GcdViolation("gcd(a, r) = " + std::to_string(std::gcd(a, r)) +
                       " for " + to_string(GroupType{r, a}));
  return {r, a};
}

/// Enumerate every valid (r, a) with 1 <= r <= max_r, r = 1 included.
inline auto all_groups(int max_r, int min_r = 1) -> std::vector<GroupType> {
  std::vector<GroupType> out;
  for (int r = std::max(1, min_r); r <= max_r; ++r) {
    if (r == 1) {
      out.push_back({1, 0});
      continue;
    }
    for (int a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) out.push_back({r, a});
  }
  return out;
}

inline constexpr auto mod(std::int64_t v, std::int64_t r) -> int {
  auto m = v % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

/// Character rho_idx, rho_idx(g) = omega^idx. Always the degree of a
/// section, never the index of a bundle (see mckay_quiver.hpp for the star).
struct Character {
  int idx = 0;
  friend auto operator<=>(const Character &, const Character &) = default;
};

/// x^b y^c in k[x,y].
struct PlaneMonomial {
  int b = 0;
  int c = 0;

  friend auto operator<=>(const PlaneMonomial &,
                          const PlaneMonomial &) = default;
  friend auto operator*(PlaneMonomial l, PlaneMonomial r) -> PlaneMonomial {
    return {l.b + r.b, l.c + r.c};
  }
  [[nodiscard]] auto divides(PlaneMonomial o) const -> bool {
    return b <= o.b && c <= o.c;
  }
  [[nodiscard]] auto is_one() const -> bool { return b == 0 && c == 0; }
  [[nodiscard]] auto degree() const -> int { return b + c; }
};

inline auto x_pow(int e) -> PlaneMonomial { return {e, 0}; }
inline auto y_pow(int e) -> PlaneMonomial { return {0, e}; }

inline auto to_string(PlaneMonomial m) -> std::string {
  if (m.is_one()) return "1";
  std::string s;
  auto part = [&](char v, int e) {
    if (e == 0) return;
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  part('x', m.b);
  part('y', m.c);
  return s;
}

inline auto char_of(PlaneMonomial m, const GroupType &g) -> Character {
  return {mod(static_cast<std::int64_t>(m.b) +
                  static_cast<std::int64_t>(g.a) * m.c,
              g.r)};
}

/// (beta, alpha): r times the primitive generator of a ray of the fan.
struct RayPair {
  int beta = 0;
  int alpha = 0;
  friend auto operator<=>(const RayPair &, const RayPair &) = default;
};

struct ResolutionData {
  GroupType group;
  int ell = 0;
  std::vector<RayPair> pairs; // tau_0 .. tau_{ell+1}
  std::vector<int> coeffs;    // c_1 .. c_ell, stored 0-based

  [[nodiscard]] auto r() const -> int { return group.r; }
  [[nodiscard]] auto alpha(int i) const -> int { return pairs.at(i).alpha; }
  [[nodiscard]] auto beta(int i) const -> int { return pairs.at(i).beta; }
  /// c_i for 1 <= i <= ell.
  [[nodiscard]] auto coeff(int i) const -> int { return coeffs.at(i - 1); }
  [[nodiscard]] auto rays() const -> int { return ell + 2; }
  friend auto operator==(const ResolutionData &, const ResolutionData &) -> bool = default;
};

namespace detail {

inline auto cross(RayPair o, RayPair p, RayPair q) -> std::int64_t {
  return static_cast<std::int64_t>(p.beta - o.beta) * (q.alpha - o.alpha) -
         static_cast<std::int64_t>(p.alpha - o.alpha) * (q.beta - o.beta);
}

inline auto in_lattice(RayPair p, const GroupType &g) -> bool {
  return mod(p.alpha - static_cast<std::int64_t>(g.a) * p.beta, g.r) == 0;
}

inline auto primitive_in_lattice(RayPair p, const GroupType &g) -> bool {
  int bound = std::max(p.beta, p.alpha);
  for (int k = 2; k <= bound; ++k)
    if (p.beta % k == 0 && p.alpha % k == 0 &&
        in_lattice({p.beta / k, p.alpha / k}, g))
      return false;
  return true;
}

} // namespace detail

/// Throws ConsistencyError unless every structural invariant holds.
inline void check_resolution_invariants(const ResolutionData &rd) {
  const auto &g = rd.group;
  const int r = g.r;
  auto fail = [&](const std::string &what) {
    throw ConsistencyError("resolution data of " + to_string(g) + ": " + what);
  };
  if (static_cast<int>(rd.pairs.size()) != rd.ell + 2) fail("pair count");
  if (static_cast<int>(rd.coeffs.size()) != rd.ell) fail("coefficient count");
  if (rd.pairs.front() != RayPair{r, 0}) fail("first ray is not (r, 0)");
  if (rd.pairs.back() != RayPair{0, r}) fail("last ray is not (0, r)");
  for (int i = 1; i < rd.ell + 2; ++i) {
    if (!(rd.pairs[i - 1].beta > rd.pairs[i].beta)) fail("beta not decreasing");
    if (!(rd.pairs[i - 1].alpha < rd.pairs[i].alpha))
      fail("alpha not increasing");
  }
  for (int i = 1; i <= rd.ell; ++i) {
    const auto &prev = rd.pairs[i - 1], &cur = rd.pairs[i],
               &next = rd.pairs[i + 1];
    int c = rd.coeff(i);
    if (c < 2) fail("c_" + std::to_string(i) + " < 2");
    if (prev.beta + next.beta != c * cur.beta ||
        prev.alpha + next.alpha != c * cur.alpha)
      fail("v_{i-1} + v_{i+1} != c_i v_i at i = " + std::to_string(i));
  }
  for (const auto &p : rd.pairs) {
    if (!detail::in_lattice(p, g)) fail("ray outside N");
    if (!detail::primitive_in_lattice(p, g)) fail("ray not primitive in N");
  }
}

/// Rays of the minimal resolution as the lattice points on the compact part
/// of the boundary of conv((sigma cap N) minus 0), ordered from (1,0) to
/// (0,1). Coefficients are read off v_{i-1} + v_{i+1} = c_i v_i.
inline auto resolution_data(const GroupType &g) -> ResolutionData {
  const int r = g.r;
  // Scaled by r, N is {(beta, alpha) : alpha = a beta mod r}. One candidate
  // per beta in [0, r]; anything else is dominated by one of these.
  std::vector<RayPair> cand;
  cand.push_back({r, 0});
  for (int beta = r - 1; beta >= 1; --beta)
    cand.push_back({beta, mod(static_cast<std::int64_t>(g.a) * beta, r)});
  cand.push_back({0, r});

  std::vector<RayPair> hull;
  for (const auto &p : cand) {
    // Pop strictly outward (away from the origin) points; keep collinear
    // ones, which are the c_i = 2 rays.
    while (hull.size() >= 2 &&
           detail::cross(hull[hull.size() - 2], p, hull.back()) < 0)
      hull.pop_back();
    hull.push_back(p);
  }

  ResolutionData rd;
  rd.group = g;
  rd.pairs = std::move(hull);
  rd.ell = static_cast<int>(rd.pairs.size()) - 2;
  for (int i = 1; i <= rd.ell; ++i) {
    const auto &prev = rd.pairs[i - 1], &cur = rd.pairs[i],
               &next = rd.pairs[i + 1];
    int sum = prev.beta + next.beta;
    if (cur.beta == 0 || sum % cur.beta != 0)
      throw ConsistencyError("non-integral c_i in " + to_string(g));
    rd.coeffs.push_back(sum / cur.beta);
  }
  check_resolution_invariants(rd);
  return rd;
}

namespace detail {

inline auto sort_by_x(std::vector<PlaneMonomial> v) -> std::vector<PlaneMonomial> {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Minimal elements, under divisibility, of the monomials x^b y^c with
/// b, c <= bound whose character lies in `wanted` (a predicate).
template <class Pred>
auto minimal_monomials(int bound, Pred wanted) -> std::vector<PlaneMonomial> {
  const int n = bound + 1;
  // any[b][c]: some wanted monomial divides x^b y^c.
  std::vector<char> any(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int b, int c) -> char & {
    return any[static_cast<std::size_t>(b) * n + c];
  };
  std::vector<PlaneMonomial> out;
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      bool below = (b > 0 && at(b - 1, c)) || (c > 0 && at(b, c - 1));
      bool here = wanted(PlaneMonomial{b, c});
      if (here && !below) out.push_back({b, c});
      at(b, c) = static_cast<char>(below || here);
    }
  return out;
}

} // namespace detail

/// Minimal monomial generators of k[x,y]^G by direct enumeration.
inline auto invariant_generators_oracle(const GroupType &g)
    -> std::vector<PlaneMonomial> {
  return detail::sort_by_x(detail::minimal_monomials(g.r, [&](PlaneMonomial m) {
    return !m.is_one() && char_of(m, g).idx == 0;
  }));
}

/// The closed formula in terms of the resolution data, evaluated as a set.
/// Uses m_0 := 1; requires ell >= 1.
inline auto invariant_generators_formula(const ResolutionData &rd)
    -> std::vector<PlaneMonomial> {
  if (rd.ell < 1)
    throw RangeViolation("invariant generator formula needs ell >= 1");
  const int r = rd.r();
  std::vector<PlaneMonomial> out{y_pow(r), x_pow(r)};
  for (int i = 0; i <= rd.ell; ++i) {
    int m = (i == 0) ? 1 : std::max(1, rd.coeff(i) - 1);
    for (int t = 1; t <= m; ++t)
      out.push_back({rd.alpha(i + 1) - t * rd.alpha(i),
                     t * rd.beta(i) - rd.beta(i + 1)});
  }
  for (auto &mon : out)
    if (mon.b < 0 || mon.c < 0)
      throw ConsistencyError("negative exponent in invariant formula for " +
                             to_string(rd.group));
  return detail::sort_by_x(std::move(out));
}

/// Oracle enumeration, cross-checked against the closed formula whenever the
/// formula applies. Sorted by increasing power of x.
inline auto invariant_generators(const GroupType &g,
                                 const ResolutionData &rd)
    -> std::vector<PlaneMonomial> {
  auto gens = invariant_generators_oracle(g);
  if (rd.ell >= 1 && invariant_generators_formula(rd) != gens)
    throw ConsistencyError("invariant generators: enumeration and formula "
                           "disagree for " +
                           to_string(g));
  return gens;
}

inline auto invariant_generators(const GroupType &g)
    -> std::vector<PlaneMonomial> {
  return invariant_generators(g, resolution_data(g));
}

struct RiemenschneiderEntry {
  int i = 0;
  int m = 0;
  int alpha_lhs = 0; // alpha_{i+1} - m_i alpha_i
  int alpha_rhs = 0; // alpha_i - alpha_{i-1}
  int beta_lhs = 0;  // m_i beta_i - beta_{i+1}
  int beta_rhs = 0;  // beta_{i-1} - beta_i
  bool alpha_holds = false;
  bool beta_holds = false;
};

/// Evaluates both strict inequality families verbatim; reports, never throws.
inline auto riemenschneider_inequalities(const ResolutionData &rd)
    -> std::vector<RiemenschneiderEntry> {
  std::vector<RiemenschneiderEntry> out;
  for (int i = 1; i <= rd.ell; ++i) {
    RiemenschneiderEntry e;
    e.i = i;
    e.m = std::max(1, rd.coeff(i) - 1);
    e.alpha_lhs = rd.alpha(i + 1) - e.m * rd.alpha(i);
    e.alpha_rhs = rd.alpha(i) - rd.alpha(i - 1);
    e.beta_lhs = e.m * rd.beta(i) - rd.beta(i + 1);
    e.beta_rhs = rd.beta(i - 1) - rd.beta(i);
    e.alpha_holds = e.alpha_lhs > e.alpha_rhs;
    e.beta_holds = e.beta_lhs < e.beta_rhs;
    out.push_back(e);
  }
  return out;
}

} // namespace qforge
