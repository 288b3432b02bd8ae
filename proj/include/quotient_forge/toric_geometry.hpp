#pragma once

// Fan of the minimal resolution: torus-invariant divisors, Picard classes,
// intersection numbers, charts and the preferred line bundles L_0..L_ell.

#include "quotient_forge/cyclic_arith.hpp"
#include "quotient_forge/integer_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qforge {

/// Integer vector indexed by the rays tau_0..tau_{ell+1}.
struct CoxVector {
  std::vector<std::int64_t> coeffs;

  CoxVector() = default;
  explicit CoxVector(std::size_t n) : coeffs(n, 0) {}
  CoxVector(std::initializer_list<std::int64_t> init) : coeffs(init) {}

  [[nodiscard]] auto size() const -> std::size_t { return coeffs.size(); }
  auto operator[](std::size_t k) -> std::int64_t & { return coeffs[k]; }
  auto operator[](std::size_t k) const -> std::int64_t { return coeffs[k]; }

  [[nodiscard]] auto effective() const -> bool {
    for (auto v : coeffs)
      if (v < 0) return false;
    return true;
  }

  friend auto operator==(const CoxVector &, const CoxVector &) -> bool = default;
  friend auto operator<=>(const CoxVector &, const CoxVector &) = default;

  auto operator+=(const CoxVector &o) -> CoxVector & {
    if (coeffs.empty()) coeffs.assign(o.size(), 0);
    for (std::size_t k = 0; k < o.size(); ++k) coeffs[k] += o.coeffs[k];
    return *this;
  }
  friend auto operator+(CoxVector l, const CoxVector &r) -> CoxVector {
    return l += r;
  }
  friend auto operator-(CoxVector l, const CoxVector &r) -> CoxVector {
    for (std::size_t k = 0; k < r.size(); ++k) l.coeffs[k] -= r.coeffs[k];
    return l;
  }
};

inline auto unit_divisor(std::size_t k, const ResolutionData &rd) -> CoxVector {
  CoxVector d(static_cast<std::size_t>(rd.rays()));
  d[k] = 1;
  return d;
}

/// Monomial x_0^{d_0} ... x_{ell+1}^{d_{ell+1}} in the Cox ring.
inline auto to_string(const CoxVector &d) -> std::string {
  std::string s;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(k);
    if (d[k] != 1) s += "^" + std::to_string(d[k]);
  }
  return s.empty() ? "1" : s;
}

/// Canonical representative of a class in Pic(X): degrees on D_1..D_ell.
struct PicClass {
  std::vector<std::int64_t> cls;
  friend auto operator==(const PicClass &, const PicClass &) -> bool = default;
  friend auto operator<=>(const PicClass &, const PicClass &) = default;
};

/// f(x^b y^c)_k = floor((b beta_k + c alpha_k) / r).
inline auto floor_divisor(PlaneMonomial m, const ResolutionData &rd)
    -> CoxVector {
  CoxVector d(static_cast<std::size_t>(rd.rays()));
  const std::int64_t r = rd.r();
  for (int k = 0; k < rd.rays(); ++k) {
    std::int64_t num = static_cast<std::int64_t>(m.b) * rd.beta(k) +
                       static_cast<std::int64_t>(m.c) * rd.alpha(k);
    d[k] = num / r; // num >= 0
  }
  return d;
}

/// Same formula for a Laurent monomial x^p y^q with (p, q) in M, where it is
/// exact and linear.
inline auto laurent_divisor(std::int64_t p, std::int64_t q,
                            const ResolutionData &rd) -> CoxVector {
  const std::int64_t r = rd.r();
  if (mod(p + static_cast<std::int64_t>(rd.group.a) * q, r) != 0)
    throw ConsistencyError("laurent_divisor: exponent outside M");
  CoxVector d(static_cast<std::size_t>(rd.rays()));
  for (int k = 0; k < rd.rays(); ++k) {
    std::int64_t num = p * rd.beta(k) + q * rd.alpha(k);
    if (num % r != 0) throw ConsistencyError("laurent_divisor: inexact");
    d[k] = num / r;
  }
  return d;
}

/// Generator of a torus-invariant line bundle on each chart U_0..U_ell.
using ChartGenerators = std::vector<PlaneMonomial>;

/// Generators of L_i: x^{alpha_i} on U_j for i <= j, y^{beta_i} otherwise.
inline auto bundle_chart_generators(int i, const ResolutionData &rd) -> ChartGenerators {
  if (i < 0 || i > rd.ell) throw RangeViolation("bundle index out of range");
  ChartGenerators gens;
  for (int j = 0; j <= rd.ell; ++j)
    gens.push_back(i <= j ? x_pow(rd.alpha(i)) : y_pow(rd.beta(i)));
  return gens;
}

/// Divisor of zeroes of the section of Hom(E, F) given by the monomial m,
/// where E and F have the given chart generators. The ray tau_k is read on
/// the chart U_{min(k, ell)}.
inline auto section_label(PlaneMonomial m, const ChartGenerators &tail,
                          const ChartGenerators &head, const ResolutionData &rd)
    -> CoxVector {
  const std::int64_t r = rd.r();
  CoxVector d(static_cast<std::size_t>(rd.rays()));
  for (int k = 0; k < rd.rays(); ++k) {
    auto j = static_cast<std::size_t>(std::min(k, rd.ell));
    std::int64_t db = std::int64_t{m.b} + tail.at(j).b - head.at(j).b;
    std::int64_t dc = std::int64_t{m.c} + tail.at(j).c - head.at(j).c;
    std::int64_t num = db * rd.beta(k) + dc * rd.alpha(k);
    if (num % r != 0)
      throw ConsistencyError("section_label: " + to_string(m) + " has the wrong character");
    if (num < 0)
      throw ConsistencyError("section_label: " + to_string(m) + " is not a section");
    d[k] = num / r;
  }
  return d;
}

/// Cox label of the section m of Hom(L_i, L_j) for the tail vertex i; the
/// head j is the vertex of degree deg(x^{alpha_i}) + deg(m).
inline auto section_divisor(PlaneMonomial m, int tail_vertex,
                            const ResolutionData &rd) -> CoxVector {
  auto target = char_of(m * x_pow(rd.alpha(tail_vertex)), rd.group);
  for (int j = 0; j <= rd.ell; ++j)
    if (char_of(x_pow(rd.alpha(j)), rd.group) == target)
      return section_label(m, bundle_chart_generators(tail_vertex, rd),
                           bundle_chart_generators(j, rd), rd);
  throw ConsistencyError("section_divisor: " + to_string(m) + " from vertex " +
                         std::to_string(tail_vertex) + " hits no vertex");
}

/// D_i . D_j on the minimal resolution. Pairings of two non-compact
/// divisors are refused.
class IntersectionForm {
public:
  explicit IntersectionForm(const ResolutionData &rd) : rd_(&rd) {}

  [[nodiscard]] auto size() const -> int { return rd_->rays(); }
  [[nodiscard]] auto compact(int i) const -> bool {
    return i >= 1 && i <= rd_->ell;
  }

  [[nodiscard]] auto operator()(int i, int j) const -> std::int64_t {
    if (i < 0 || j < 0 || i >= size() || j >= size())
      throw RangeViolation("intersection index out of range");
    if (!compact(i) && !compact(j))
      throw NonCompactPairing("D_" + std::to_string(i) + " . D_" +
                              std::to_string(j));
    if (i == j) return -rd_->coeff(i);
    return (i - j == 1 || j - i == 1) ? 1 : 0;
  }

  /// Entry or nullopt for the undefined pairings.
  [[nodiscard]] auto entry(int i, int j) const -> std::optional<std::int64_t> {
    if (!compact(i) && !compact(j)) return std::nullopt;
    return (*this)(i, j);
  }

private:
  const ResolutionData *rd_;
};

inline auto intersection_matrix(const ResolutionData &rd)
    -> std::vector<std::vector<std::optional<std::int64_t>>> {
  IntersectionForm form(rd);
  std::vector<std::vector<std::optional<std::int64_t>>> out(
      rd.rays(), std::vector<std::optional<std::int64_t>>(rd.rays()));
  for (int i = 0; i < rd.rays(); ++i)
    for (int j = 0; j < rd.rays(); ++j) out[i][j] = form.entry(i, j);
  return out;
}

inline auto pic_class(const CoxVector &d, const ResolutionData &rd)
    -> PicClass {
  IntersectionForm form(rd);
  PicClass p;
  p.cls.assign(rd.ell, 0);
  for (int j = 1; j <= rd.ell; ++j)
    for (int k = 0; k < rd.rays(); ++k) p.cls[j - 1] += d[k] * form(k, j);
  return p;
}

/// The (ell+2) x 2 matrix of the map M -> Z^{Sigma(1)} in the basis
/// (r, 0), (-a, 1) of M.
inline auto character_matrix(const ResolutionData &rd) -> IntegerMatrix {
  const int r = rd.r(), a = rd.group.a;
  IntegerMatrix m(rd.rays(), 2);
  for (int k = 0; k < rd.rays(); ++k) {
    m(k, 0) = rd.beta(k);                                // <(r,0), v_k>
    m(k, 1) = (rd.alpha(k) - a * rd.beta(k)) / r;       // <(-a,1), v_k>
  }
  return m;
}

/// Linear equivalence decided by a Smith-form cokernel computation.
inline auto same_pic_class_snf(const CoxVector &d1, const CoxVector &d2,
                               const ResolutionData &rd) -> bool {
  IntVector diff(rd.rays());
  for (int k = 0; k < rd.rays(); ++k) diff[k] = d1[k] - d2[k];
  return in_column_lattice(character_matrix(rd), diff);
}

struct LaurentExponent {
  std::int64_t p = 0; // exponent of x
  std::int64_t q = 0; // exponent of y
  friend auto operator==(const LaurentExponent &,
                         const LaurentExponent &) -> bool = default;
};

/// Generators x^{alpha_{j+1}}/y^{beta_{j+1}} and y^{beta_j}/x^{alpha_j} of
/// the coordinate ring of the chart U_j.
inline auto chart_dual_generators(int j, const ResolutionData &rd)
    -> std::pair<LaurentExponent, LaurentExponent> {
  if (j < 0 || j > rd.ell) throw RangeViolation("chart index out of range");
  LaurentExponent u{rd.alpha(j + 1), -rd.beta(j + 1)};
  LaurentExponent v{-rd.alpha(j), rd.beta(j)};
  for (const auto &e : {u, v})
    if (mod(e.p + static_cast<std::int64_t>(rd.group.a) * e.q, rd.r()) != 0)
      throw ConsistencyError("chart generator outside M");
  return {u, v};
}

struct LineBundleSeq {
  std::vector<PicClass> bundles;                           // L_0..L_ell
  std::vector<std::vector<PlaneMonomial>> chart_generators; // [i][j]

  [[nodiscard]] auto generator(int i, int j) const -> PlaneMonomial {
    return chart_generators.at(i).at(j);
  }
};

/// Divisor of zeroes of the section x^{alpha_i} of L_i.
inline auto bundle_divisor(int i, const ResolutionData &rd) -> CoxVector {
  return section_label(x_pow(rd.alpha(i)), bundle_chart_generators(0, rd),
                       bundle_chart_generators(i, rd), rd);
}

inline auto preferred_bundles(const ResolutionData &rd) -> LineBundleSeq {
  LineBundleSeq seq;
  const int n = rd.ell + 1;
  for (int i = 0; i < n; ++i) {
    seq.bundles.push_back(pic_class(bundle_divisor(i, rd), rd));
    seq.chart_generators.push_back(bundle_chart_generators(i, rd));
  }
  for (int i = 1; i < n; ++i) {
    if (char_of(x_pow(rd.alpha(i)), rd.group) !=
        char_of(y_pow(rd.beta(i)), rd.group))
      throw ConsistencyError("chart generators of L_" + std::to_string(i) +
                             " have different characters");
    for (int j = 1; j < n; ++j)
      if (seq.bundles[i].cls[j - 1] != (i == j ? 1 : 0))
        throw ConsistencyError("deg(L_" + std::to_string(i) + "|D_" +
                               std::to_string(j) + ") is not delta_ij");
  }
  return seq;
}

/// The ell x ell matrix deg(L_i|D_j), 1 <= i, j <= ell.
inline auto degree_matrix(const LineBundleSeq &seq)
    -> std::vector<std::vector<std::int64_t>> {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 1; i < seq.bundles.size(); ++i) out.push_back(seq.bundles[i].cls);
  return out;
}

} // namespace qforge
