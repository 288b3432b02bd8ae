#pragma once

// JSON, DOT, Macaulay2 and plain-text emitters.

#include "quotient_forge/moduli_verify.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qforge {

using nlohmann::json;

/// I_Q, J, B_Q and the weight matrix of one special quiver.
struct IdealSummary {
  IntegerMatrix weights;
  BinomialIdeal toric;
  BinomialIdeal relations;
  BinomialIdeal irrelevant;
  friend auto operator==(const IdealSummary &, const IdealSummary &) -> bool = default;
};

inline auto compute_ideals(const SpecialQuiver &sq) -> IdealSummary {
  IdealSummary s;
  s.weights = weight_matrix(sq);
  s.toric = toric_ideal(s.weights);
  s.relations = relation_ideal(sq);
  s.irrelevant = irrelevant_ideal(sq);
  return s;
}

// ---------------------------------------------------------------------------
// JSON

inline constexpr std::int64_t kMaxExactDouble = (std::int64_t{1} << 53) - 1;

inline auto integer_to_json(const Integer &v) -> json {
  if (v <= kMaxExactDouble && v >= -kMaxExactDouble) return static_cast<std::int64_t>(v);
  return v.str();
}

inline auto integer_from_json(const json &j) -> Integer {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

inline void to_json(json &j, const GroupType &g) {
  j = json{{"r", g.r}, {"a", g.a}, {"type", to_string(g)}};
}
inline void from_json(const json &j, GroupType &g) {
  g.r = j.at("r").get<int>();
  g.a = j.at("a").get<int>();
}

inline void to_json(json &j, const PlaneMonomial &m) { j = json{{"b", m.b}, {"c", m.c}}; }
inline void from_json(const json &j, PlaneMonomial &m) {
  m.b = j.at("b").get<int>();
  m.c = j.at("c").get<int>();
}

inline void to_json(json &j, const ResolutionData &rd) {
  json pairs = json::array();
  for (const auto &p : rd.pairs) pairs.push_back({{"beta", p.beta}, {"alpha", p.alpha}});
  j = json{{"group", rd.group}, {"ell", rd.ell}, {"pairs", pairs}, {"coeffs", rd.coeffs}};
}
inline void from_json(const json &j, ResolutionData &rd) {
  rd.group = j.at("group").get<GroupType>();
  rd.ell = j.at("ell").get<int>();
  rd.pairs.clear();
  for (const auto &p : j.at("pairs"))
    rd.pairs.push_back({p.at("beta").get<int>(), p.at("alpha").get<int>()});
  rd.coeffs = j.at("coeffs").get<std::vector<int>>();
}

inline void to_json(json &j, const Arrow &a) {
  j = json{{"id", a.id}, {"tail", a.tail}, {"head", a.head}, {"mon", a.mon},
           {"mon_text", to_string(a.mon)}};
  j["cox"] = a.cox ? json(a.cox->coeffs) : json(nullptr);
}
inline void from_json(const json &j, Arrow &a) {
  a.id = j.at("id").get<int>();
  a.tail = j.at("tail").get<int>();
  a.head = j.at("head").get<int>();
  a.mon = j.at("mon").get<PlaneMonomial>();
  if (j.at("cox").is_null())
    a.cox.reset();
  else {
    a.cox = CoxVector{};
    a.cox->coeffs = j.at("cox").get<std::vector<std::int64_t>>();
  }
}

inline void to_json(json &j, const LabelledQuiver &q) {
  j = json{{"vertices", q.vertex_count()}, {"arrows", q.arrows()}};
}
inline void from_json(const json &j, LabelledQuiver &q) {
  q = LabelledQuiver(j.at("vertices").get<int>());
  for (const auto &a : j.at("arrows")) q.add_arrow(a.get<Arrow>());
}

inline void to_json(json &j, const RelationSet &rs) {
  j = json::array();
  for (const auto &pr : rs.pairs) j.push_back({{"p", pr.p}, {"q", pr.q}});
}
inline void from_json(const json &j, RelationSet &rs) {
  rs.pairs.clear();
  for (const auto &pr : j) rs.pairs.push_back({pr.at("p").get<Path>(), pr.at("q").get<Path>()});
}

inline void to_json(json &j, const BoundQuiver &bq) {
  j = bq.quiver;
  j["relations"] = bq.relations;
}
inline void from_json(const json &j, BoundQuiver &bq) {
  bq.quiver = j.get<LabelledQuiver>();
  bq.relations = j.at("relations").get<RelationSet>();
}

inline void to_json(json &j, const SpecialQuiver &sq) {
  j = sq.quiver;
  json kinds = json::array();
  for (auto k : sq.kind) kinds.push_back(to_string(k));
  j["kinds"] = kinds;
  j["group"] = sq.group;
  j["resolution"] = sq.rd;
}
inline void from_json(const json &j, SpecialQuiver &sq) {
  sq.group = j.at("group").get<GroupType>();
  sq.rd = j.at("resolution").get<ResolutionData>();
  sq.quiver = j.get<LabelledQuiver>();
  sq.kind.clear();
  for (const auto &k : j.at("kinds")) {
    auto s = k.get<std::string>();
    sq.kind.push_back(s == "x" ? ArrowKind::X : s == "y" ? ArrowKind::Y : ArrowKind::XY);
  }
}

inline void to_json(json &j, const IntegerMatrix &M) {
  j = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < M.cols(); ++k) row.push_back(integer_to_json(M(i, k)));
    j.push_back(row);
  }
}
inline void from_json(const json &j, IntegerMatrix &M) {
  std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
  M = IntegerMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) M(i, k) = integer_from_json(j.at(i).at(k));
}

inline void to_json(json &j, const BinomialIdeal &I) {
  json bins = json::array();
  for (const auto &[u, v] : I.binomials) bins.push_back({{"lead", u}, {"tail", v}});
  j = json{{"num_vars", I.num_vars}, {"binomials", bins}, {"monomials", I.monomials}};
}
inline void from_json(const json &j, BinomialIdeal &I) {
  I.num_vars = j.at("num_vars").get<int>();
  I.binomials.clear();
  for (const auto &b : j.at("binomials"))
    I.binomials.emplace_back(b.at("lead").get<Exponent>(), b.at("tail").get<Exponent>());
  I.monomials = j.at("monomials").get<std::vector<Exponent>>();
}

inline void to_json(json &j, const IdealSummary &s) {
  j = json{{"weight_matrix", s.weights},
           {"toric", s.toric},
           {"relations", s.relations},
           {"irrelevant", s.irrelevant}};
}
inline void from_json(const json &j, IdealSummary &s) {
  s.weights = j.at("weight_matrix").get<IntegerMatrix>();
  s.toric = j.at("toric").get<BinomialIdeal>();
  s.relations = j.at("relations").get<BinomialIdeal>();
  s.irrelevant = j.at("irrelevant").get<BinomialIdeal>();
}

inline void to_json(json &j, const Claim &c) {
  j = json{{"name", c.name},       {"statement", c.statement}, {"passed", c.passed},
           {"vacuous", c.vacuous}, {"detail", c.detail},       {"children", c.children}};
}
inline void from_json(const json &j, Claim &c) {
  c.name = j.at("name").get<std::string>();
  c.statement = j.at("statement").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.vacuous = j.at("vacuous").get<bool>();
  c.detail = j.at("detail").get<std::string>();
  c.children = j.at("children").get<std::vector<Claim>>();
}

inline void to_json(json &j, const Report &r) {
  j = json{{"group", r.group}, {"passed", r.passed()}, {"claims", r.claims}};
}
inline void from_json(const json &j, Report &r) {
  r.group = j.at("group").get<GroupType>();
  r.claims = j.at("claims").get<std::vector<Claim>>();
}

inline auto emit_json(const json &doc) -> std::string { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Plain text helpers

inline auto format_monomial(const Exponent &e, const std::string &var = "y") -> std::string {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += var + std::to_string(k + 1);
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

inline auto format_binomial(const Exponent &u, const Exponent &v, const std::string &var = "y")
    -> std::string {
  return format_monomial(u, var) + " - " + format_monomial(v, var);
}

inline auto format_generators(const BinomialIdeal &I, const std::string &var = "y")
    -> std::vector<std::string> {
  std::vector<std::string> out;
  for (const auto &[u, v] : I.binomials) out.push_back(format_binomial(u, v, var));
  for (const auto &m : I.monomials) out.push_back(format_monomial(m, var));
  return out;
}

inline auto arrow_line(const Arrow &a, std::optional<ArrowKind> kind = std::nullopt) -> std::string {
  std::ostringstream os;
  os << "a" << a.id + 1 << ": " << a.tail << " -> " << a.head << "  " << to_string(a.mon);
  if (a.cox) os << "  [" << to_string(*a.cox) << "]";
  if (kind) os << "  (" << to_string(*kind) << ")";
  return os.str();
}

inline auto format_resolution(const ResolutionData &rd) -> std::string {
  std::ostringstream os;
  os << to_string(rd.group) << ": " << rd.ell << " exceptional curve" << (rd.ell == 1 ? "" : "s")
     << "\n";
  os << "rays (beta, alpha):";
  for (const auto &p : rd.pairs) os << " (" << p.beta << "," << p.alpha << ")";
  os << "\nself-intersections:";
  for (auto c : rd.coeffs) os << " -" << c;
  os << "\ncharts:";
  for (int j = 0; j <= rd.ell; ++j) {
    auto [u, v] = chart_dual_generators(j, rd);
    os << " U_" << j << " = <x^" << u.p << "y^" << u.q << ", x^" << v.p << "y^" << v.q << ">";
  }
  os << "\n";
  return os.str();
}

inline auto format_quiver(const LabelledQuiver &q, const std::vector<ArrowKind> &kinds = {})
    -> std::string {
  std::ostringstream os;
  os << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows\n";
  for (const auto &a : q.arrows()) {
    std::optional<ArrowKind> k;
    if (static_cast<std::size_t>(a.id) < kinds.size()) k = kinds[a.id];
    os << "  " << arrow_line(a, k) << "\n";
  }
  return os.str();
}

inline auto format_relations(const RelationSet &rs) -> std::string {
  auto path = [](const Path &p) {
    std::string s;
    for (int id : p) s += "a" + std::to_string(id + 1);
    return s.empty() ? std::string("e") : s;
  };
  std::ostringstream os;
  for (const auto &pr : rs.pairs) os << "  " << path(pr.p) << " - " << path(pr.q) << "\n";
  return os.str();
}

inline auto format_ideals(const IdealSummary &s) -> std::string {
  std::ostringstream os;
  os << "weight matrix:\n" << s.weights.to_string();
  auto block = [&](const char *name, const BinomialIdeal &I) {
    auto gens = format_generators(I);
    os << name << " (" << gens.size() << " generators):\n";
    for (const auto &g : gens) os << "  " << g << "\n";
  };
  block("I_Q", s.toric);
  block("J", s.relations);
  block("B_Q", s.irrelevant);
  return os.str();
}

namespace detail {
inline void format_claim(std::ostringstream &os, const Claim &c, int depth) {
  os << std::string(2 * depth, ' ') << (c.passed ? "PASS " : "FAIL ") << c.name;
  if (c.vacuous) os << " (vacuous)";
  os << ": " << c.statement;
  if (!c.detail.empty()) os << " [" << c.detail << "]";
  os << "\n";
  for (const auto &ch : c.children) format_claim(os, ch, depth + 1);
}
} // namespace detail

inline auto format_report(const Report &r) -> std::string {
  std::ostringstream os;
  os << to_string(r.group) << ": " << (r.passed() ? "all claims hold" : "FAILED") << "\n";
  for (const auto &c : r.claims) detail::format_claim(os, c, 1);
  return os.str();
}

// ---------------------------------------------------------------------------
// DOT

inline auto emit_dot(const LabelledQuiver &q, const std::string &name, bool number_arrows = true)
    -> std::string {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < q.vertex_count(); ++v)
    os << "  " << v << (v == 0 ? " [shape=doublecircle]" : "") << ";\n";
  for (const auto &a : q.arrows()) {
    os << "  " << a.tail << " -> " << a.head << " [label=\"";
    if (number_arrows) os << "a" << a.id + 1 << ": ";
    os << to_string(a.mon);
    if (a.cox) os << " | " << to_string(*a.cox);
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Macaulay2

inline auto emit_cas(const GroupType &g, const IdealSummary &s) -> std::string {
  const int n = s.relations.num_vars;
  auto m2 = [](const std::string &t) {
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) {
      out += t[k];
      if (t[k] == 'y' && k + 1 < t.size() && std::isdigit(static_cast<unsigned char>(t[k + 1])))
        out += '_';
    }
    return out;
  };
  auto ideal = [&](const BinomialIdeal &I) {
    auto gens = format_generators(I);
    if (gens.empty()) return std::string("ideal(0_R)");
    std::string out = "ideal(";
    for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : "") + m2(gens[k]);
    return out + ")";
  };
  std::ostringstream os;
  os << "-- " << to_string(g) << "\n";
  os << "R = QQ[y_1..y_" << n << "];\n";
  os << "IQ = " << ideal(s.toric) << ";\n";
  os << "J = " << ideal(s.relations) << ";\n";
  os << "BQ = " << ideal(s.irrelevant) << ";\n";
  os << "saturate(J, BQ) == saturate(IQ, BQ)\n";
  return os.str();
}

} // namespace qforge
