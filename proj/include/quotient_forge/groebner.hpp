#pragma once

// A small Groebner engine: block monomial orders, a Buchberger completion
// with the Gebauer-Moeller criteria, pure difference binomials x^u - x^v
// and general polynomials with exact rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qforge {

using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::vector<int>;

inline auto exp_degree(const Exponent &u) -> long {
  return std::accumulate(u.begin(), u.end(), 0L);
}
inline auto exp_divides(const Exponent &u, const Exponent &v) -> bool {
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] > v[k]) return false;
  return true;
}
inline auto exp_lcm(const Exponent &u, const Exponent &v) -> Exponent {
  Exponent w(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) w[k] = std::max(u[k], v[k]);
  return w;
}
inline auto exp_add(const Exponent &u, const Exponent &v) -> Exponent {
  Exponent w(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) w[k] = u[k] + v[k];
  return w;
}
/// u - v, requires v | u.
inline auto exp_sub(const Exponent &u, const Exponent &v) -> Exponent {
  Exponent w(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) w[k] = u[k] - v[k];
  return w;
}
inline auto exp_coprime(const Exponent &u, const Exponent &v) -> bool {
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] != 0 && v[k] != 0) return false;
  return true;
}

/// Product of blocks. Each block compares total degree first, then
/// reverse lexicographically in the listed variable order. Lex is the case
/// of singleton blocks.
class MonomialOrder {
public:
  MonomialOrder() = default;
  MonomialOrder(std::size_t nvars, std::vector<std::vector<int>> blocks)
      : nvars_(nvars), blocks_(std::move(blocks)) {
    std::vector<int> seen(nvars_, 0);
    for (const auto &b : blocks_)
      for (int v : b) {
        if (v < 0 || static_cast<std::size_t>(v) >= nvars_ || seen[v]++)
          throw std::invalid_argument("monomial order blocks must partition the variables");
      }
    for (auto s : seen)
      if (!s) throw std::invalid_argument("monomial order misses a variable");
  }

  static auto grevlex(std::size_t n) -> MonomialOrder {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return {n, {all}};
  }
  static auto lex(std::size_t n) -> MonomialOrder {
    std::vector<std::vector<int>> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back({static_cast<int>(i)});
    return {n, b};
  }
  /// grevlex on `order` read as a permutation of the variables.
  static auto grevlex(const std::vector<int> &order) -> MonomialOrder {
    return {order.size(), {order}};
  }
  /// `first` is a block above the remaining variables (grevlex in each).
  static auto elimination(std::size_t n, const std::vector<int> &first) -> MonomialOrder {
    std::vector<int> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(first.begin(), first.end(), static_cast<int>(i)) == first.end())
        rest.push_back(static_cast<int>(i));
    if (rest.empty()) return {n, {first}};
    if (first.empty()) return {n, {rest}};
    return {n, {first, rest}};
  }

  [[nodiscard]] auto nvars() const -> std::size_t { return nvars_; }
  [[nodiscard]] auto blocks() const -> const std::vector<std::vector<int>> & { return blocks_; }

  /// -1, 0, 1 as u <, =, > v.
  [[nodiscard]] auto compare(const Exponent &u, const Exponent &v) const -> int {
    for (const auto &b : blocks_) {
      long du = 0, dv = 0;
      for (int k : b) {
        du += u[k];
        dv += v[k];
      }
      if (du != dv) return du > dv ? 1 : -1;
      for (auto it = b.rbegin(); it != b.rend(); ++it)
        if (u[*it] != v[*it]) return u[*it] < v[*it] ? 1 : -1;
    }
    return 0;
  }
  [[nodiscard]] auto greater(const Exponent &u, const Exponent &v) const -> bool {
    return compare(u, v) > 0;
  }

private:
  std::size_t nvars_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// ---------------------------------------------------------------------------
// Pure difference binomials

/// x^lead - x^tail with lead > tail, or zero when `zero` is set.
struct Binomial {
  Exponent lead;
  Exponent tail;
  bool zero = true;

  static auto make(Exponent u, Exponent v, const MonomialOrder &ord) -> Binomial {
    int c = ord.compare(u, v);
    if (c == 0) return {};
    if (c < 0) std::swap(u, v);
    return {std::move(u), std::move(v), false};
  }
  [[nodiscard]] auto is_zero() const -> bool { return zero; }
  friend auto operator==(const Binomial &, const Binomial &) -> bool = default;
};

inline auto lead_exponent(const Binomial &f) -> const Exponent & { return f.lead; }

inline auto s_polynomial(const Binomial &f, const Binomial &g, const MonomialOrder &ord)
    -> Binomial {
  auto l = exp_lcm(f.lead, g.lead);
  auto fu = exp_add(exp_sub(l, f.lead), f.tail);
  auto gu = exp_add(exp_sub(l, g.lead), g.tail);
  return Binomial::make(std::move(fu), std::move(gu), ord);
}

namespace detail {

template <class P>
auto find_reducer(const Exponent &m, const std::vector<P> &basis,
                  const std::vector<std::size_t> &active) -> const P * {
  for (auto k : active)
    if (exp_divides(lead_exponent(basis[k]), m)) return &basis[k];
  return nullptr;
}

/// Reduce the monomial x^m to its normal form (a single monomial) modulo
/// binomials.
inline auto reduce_monomial(Exponent m, const std::vector<Binomial> &basis,
                            const std::vector<std::size_t> &active) -> Exponent {
  while (const auto *g = find_reducer(m, basis, active)) {
    for (std::size_t k = 0; k < m.size(); ++k) m[k] += g->tail[k] - g->lead[k];
  }
  return m;
}

} // namespace detail

/// Full normal form; both terms are reduced, so the result is zero iff the
/// two monomials become equal.
inline auto normal_form(const Binomial &f, const std::vector<Binomial> &basis,
                        const std::vector<std::size_t> &active, const MonomialOrder &ord)
    -> Binomial {
  if (f.is_zero()) return f;
  return Binomial::make(detail::reduce_monomial(f.lead, basis, active),
                        detail::reduce_monomial(f.tail, basis, active), ord);
}

inline auto monic(Binomial f) -> Binomial { return f; }

/// Re-orients f for `ord`.
inline auto reorder(const Binomial &f, const MonomialOrder &ord) -> Binomial {
  return f.is_zero() ? f : Binomial::make(f.lead, f.tail, ord);
}

// ---------------------------------------------------------------------------
// General polynomials over Q

struct Term {
  Exponent exp;
  Rational coeff;
  friend auto operator==(const Term &, const Term &) -> bool = default;
};

/// Terms sorted strictly decreasing in the order the polynomial was built
/// with; no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  [[nodiscard]] auto is_zero() const -> bool { return terms.empty(); }
  friend auto operator==(const Polynomial &, const Polynomial &) -> bool = default;

  static auto from_terms(std::vector<Term> ts, const MonomialOrder &ord) -> Polynomial {
    std::sort(ts.begin(), ts.end(),
              [&](const Term &l, const Term &r) { return ord.greater(l.exp, r.exp); });
    Polynomial p;
    for (auto &t : ts) {
      if (!p.terms.empty() && p.terms.back().exp == t.exp)
        p.terms.back().coeff += t.coeff;
      else
        p.terms.push_back(std::move(t));
      if (p.terms.back().coeff == 0) p.terms.pop_back();
    }
    return p;
  }
  static auto from_binomial(const Binomial &b) -> Polynomial {
    if (b.is_zero()) return {};
    return {{{b.lead, Rational(1)}, {b.tail, Rational(-1)}}};
  }
  static auto monomial(Exponent e) -> Polynomial { return {{{std::move(e), Rational(1)}}}; }

  [[nodiscard]] auto resorted(const MonomialOrder &ord) const -> Polynomial {
    return from_terms(terms, ord);
  }
};

inline auto lead_exponent(const Polynomial &f) -> const Exponent & { return f.terms.front().exp; }

inline auto reorder(const Polynomial &f, const MonomialOrder &ord) -> Polynomial {
  return f.resorted(ord);
}

namespace detail {

/// f - c * x^shift * g, terms of both in decreasing order.
inline auto sub_scaled(const Polynomial &f, const Rational &c, const Exponent &shift,
                       const Polynomial &g, const MonomialOrder &ord) -> Polynomial {
  Polynomial out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      out.terms.push_back(f.terms[i++]);
      continue;
    }
    Exponent ge = exp_add(g.terms[j].exp, shift);
    int cmp = i == f.terms.size() ? -1 : ord.compare(f.terms[i].exp, ge);
    if (cmp > 0) {
      out.terms.push_back(f.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back({std::move(ge), -c * g.terms[j].coeff});
      ++j;
    } else {
      Rational v = f.terms[i].coeff - c * g.terms[j].coeff;
      if (v != 0) out.terms.push_back({std::move(ge), v});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace detail

inline auto monic(Polynomial f) -> Polynomial {
  if (f.is_zero()) return f;
  Rational lc = f.terms.front().coeff;
  if (lc != 1)
    for (auto &t : f.terms) t.coeff /= lc;
  return f;
}

inline auto s_polynomial(const Polynomial &f, const Polynomial &g, const MonomialOrder &ord)
    -> Polynomial {
  const auto &lf = f.terms.front(), &lg = g.terms.front();
  auto l = exp_lcm(lf.exp, lg.exp);
  Polynomial scaled_f;
  auto sf = exp_sub(l, lf.exp);
  for (const auto &t : f.terms) scaled_f.terms.push_back({exp_add(t.exp, sf), t.coeff / lf.coeff});
  return detail::sub_scaled(scaled_f, 1 / lg.coeff, exp_sub(l, lg.exp), g, ord);
}

inline auto normal_form(const Polynomial &f, const std::vector<Polynomial> &basis,
                        const std::vector<std::size_t> &active, const MonomialOrder &ord)
    -> Polynomial {
  Polynomial rem, p = f;
  while (!p.is_zero()) {
    const auto &lt = p.terms.front();
    if (const auto *g = detail::find_reducer(lt.exp, basis, active)) {
      const auto &glt = g->terms.front();
      p = detail::sub_scaled(p, lt.coeff / glt.coeff, exp_sub(lt.exp, glt.exp), *g, ord);
    } else {
      rem.terms.push_back(lt);
      p.terms.erase(p.terms.begin());
    }
  }
  return rem;
}

// ---------------------------------------------------------------------------
// Buchberger

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t reductions_to_zero = 0;
};

template <class P> struct GroebnerBasis {
  MonomialOrder order;
  std::vector<P> basis; // reduced, monic, sorted by increasing lead
  GroebnerStats stats;

  [[nodiscard]] auto all() const -> std::vector<std::size_t> {
    std::vector<std::size_t> a(basis.size());
    std::iota(a.begin(), a.end(), 0);
    return a;
  }
  [[nodiscard]] auto reduce(const P &f) const -> P {
    return normal_form(reorder(f, order), basis, all(), order);
  }
  [[nodiscard]] auto contains(const P &f) const -> bool { return reduce(f).is_zero(); }
  [[nodiscard]] auto is_unit_ideal() const -> bool {
    return basis.size() == 1 && exp_degree(lead_exponent(basis.front())) == 0;
  }
};

/// Reduced Groebner basis. Pair selection by lcm degree, then by the
/// order; Gebauer-Moeller installation of new elements.
template <class P>
auto groebner_basis(const std::vector<P> &gens, const MonomialOrder &ord) -> GroebnerBasis<P> {
  std::vector<P> polys;
  std::vector<std::size_t> G;
  struct Pair {
    std::size_t i, j;
    Exponent lcm;
  };
  std::vector<Pair> B;
  GroebnerStats stats;

  auto update = [&](std::size_t h) {
    const auto &lh = lead_exponent(polys[h]);
    std::vector<Pair> C, D;
    for (auto g : G) C.push_back({h, g, exp_lcm(lh, lead_exponent(polys[g]))});
    for (std::size_t k = 0; k < C.size(); ++k) {
      const auto &p = C[k];
      bool keep = exp_coprime(lh, lead_exponent(polys[p.j]));
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < C.size() && keep; ++m)
          if (exp_divides(C[m].lcm, p.lcm)) keep = false;
        for (std::size_t m = 0; m < D.size() && keep; ++m)
          if (exp_divides(D[m].lcm, p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> Bn;
    for (auto &p : B) {
      bool drop = exp_divides(lh, p.lcm) &&
                  exp_lcm(lead_exponent(polys[p.i]), lh) != p.lcm &&
                  exp_lcm(lead_exponent(polys[p.j]), lh) != p.lcm;
      if (!drop) Bn.push_back(std::move(p));
    }
    for (auto &p : D)
      if (!exp_coprime(lh, lead_exponent(polys[p.j]))) Bn.push_back(std::move(p));
    B = std::move(Bn);
    std::vector<std::size_t> Gn;
    for (auto g : G)
      if (!exp_divides(lh, lead_exponent(polys[g]))) Gn.push_back(g);
    Gn.push_back(h);
    G = std::move(Gn);
  };

  auto add = [&](P f) {
    f = monic(std::move(f));
    polys.push_back(std::move(f));
    update(polys.size() - 1);
  };

  for (const auto &f : gens) {
    auto r = normal_form(reorder(f, ord), polys, G, ord);
    if (!r.is_zero()) add(std::move(r));
  }

  while (!B.empty()) {
    auto best = std::min_element(B.begin(), B.end(), [&](const Pair &l, const Pair &r) {
      auto dl = exp_degree(l.lcm), dr = exp_degree(r.lcm);
      if (dl != dr) return dl < dr;
      return ord.compare(l.lcm, r.lcm) < 0;
    });
    Pair p = *best;
    *best = std::move(B.back());
    B.pop_back();
    ++stats.pairs_considered;
    auto s = s_polynomial(polys[p.i], polys[p.j], ord);
    auto h = normal_form(s, polys, G, ord);
    if (h.is_zero()) {
      ++stats.reductions_to_zero;
      continue;
    }
    add(std::move(h));
  }

  // G is minimal; make it reduced.
  GroebnerBasis<P> out;
  out.order = ord;
  out.stats = stats;
  std::vector<P> minimal;
  for (auto g : G) minimal.push_back(polys[g]);
  std::sort(minimal.begin(), minimal.end(), [&](const P &l, const P &r) {
    return ord.compare(lead_exponent(l), lead_exponent(r)) < 0;
  });
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(m);
    // Leads are pairwise non-dividing, so only lower terms change.
    auto r = monic(normal_form(minimal[k], minimal, others, ord));
    out.basis.push_back(std::move(r));
  }
  return out;
}

/// I = J as ideals, by reducing each generator against the other's basis.
template <class P>
auto ideal_equal(const std::vector<P> &I, const std::vector<P> &J, const MonomialOrder &ord)
    -> bool {
  auto gi = groebner_basis(I, ord), gj = groebner_basis(J, ord);
  for (const auto &f : I)
    if (!gj.contains(f)) return false;
  for (const auto &f : J)
    if (!gi.contains(f)) return false;
  return true;
}

} // namespace qforge
