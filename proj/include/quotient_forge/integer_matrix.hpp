#pragma once

// Dense exact integer matrices: Hermite and Smith normal forms, kernels,
// lattice membership and total unimodularity.

#include "quotient_forge/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qforge {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw std::invalid_argument("ragged matrix literal");
      for (auto v : row) data_.emplace_back(v);
    }
  }

  static auto identity(std::size_t n) -> IntegerMatrix {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static auto from_rows(const std::vector<IntVector> &rows, std::size_t cols)
      -> IntegerMatrix {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] auto rows() const -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const -> std::size_t { return cols_; }

  auto operator()(std::size_t i, std::size_t j) -> Integer & {
    return data_[i * cols_ + j];
  }
  auto operator()(std::size_t i, std::size_t j) const -> const Integer & {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] auto row(std::size_t i) const -> IntVector {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  [[nodiscard]] auto col(std::size_t j) const -> IntVector {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  [[nodiscard]] auto transpose() const -> IntegerMatrix {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] auto is_zero() const -> bool {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Integer &v) { return v == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer &k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer &k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  friend auto operator==(const IntegerMatrix &l, const IntegerMatrix &r)
      -> bool {
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.data_ == r.data_;
  }

  friend auto operator*(const IntegerMatrix &l, const IntegerMatrix &r)
      -> IntegerMatrix {
    if (l.cols_ != r.rows_) throw std::invalid_argument("matrix shape");
    IntegerMatrix out(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i)
      for (std::size_t k = 0; k < l.cols_; ++k) {
        const auto &v = l(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < r.cols_; ++j) out(i, j) += v * r(k, j);
      }
    return out;
  }

  friend auto operator*(const IntegerMatrix &m, const IntVector &v)
      -> IntVector {
    if (m.cols_ != v.size()) throw std::invalid_argument("vector length");
    IntVector out(m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) out[i] += m(i, j) * v[j];
    return out;
  }

  [[nodiscard]] auto submatrix(const std::vector<std::size_t> &rs,
                               const std::vector<std::size_t> &cs) const
      -> IntegerMatrix {
    IntegerMatrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
    return out;
  }

  [[nodiscard]] auto to_string() const -> std::string {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
      os << "]\n";
    }
    return os.str();
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Floor division for cpp_int (which truncates).
inline auto floor_div(const Integer &a, const Integer &b) -> Integer {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct HermiteForm {
  IntegerMatrix H; // row-style HNF, zero rows last
  IntegerMatrix U; // unimodular, U * M = H
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Row Hermite normal form: positive pivots, entries above a pivot reduced
/// into [0, pivot).
inline auto hermite_normal_form(const IntegerMatrix &M) -> HermiteForm {
  IntegerMatrix H = M;
  IntegerMatrix U = IntegerMatrix::identity(M.rows());
  const std::size_t m = M.rows(), n = M.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid down the column until one nonzero entry remains at row r.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (best == m || abs(H(i, c)) < abs(H(best, c))))
          best = i;
      if (best == m) break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Integer q = H(i, c) / H(r, c);
        H.add_row(i, r, -q);
        U.add_row(i, r, -q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, c), H(r, c));
      H.add_row(i, r, -q);
      U.add_row(i, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(H), std::move(U), r, std::move(pivots)};
}

struct SmithForm {
  IntegerMatrix U; // unimodular
  IntegerMatrix D; // diagonal, d_i | d_{i+1}, d_i >= 0
  IntegerMatrix V; // unimodular; U * M * V = D
  std::size_t rank = 0;
  [[nodiscard]] auto diagonal() const -> IntVector {
    IntVector d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
      d.push_back(D(i, i));
    return d;
  }
};

inline auto smith_normal_form(const IntegerMatrix &M) -> SmithForm {
  const std::size_t m = M.rows(), n = M.cols();
  IntegerMatrix D = M;
  IntegerMatrix U = IntegerMatrix::identity(m);
  IntegerMatrix V = IntegerMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto pick = [&]() -> bool {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (bi == m || abs(D(i, j)) < abs(D(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) return false;
      D.swap_rows(t, bi);
      U.swap_rows(t, bi);
      D.swap_cols(t, bj);
      V.swap_cols(t, bj);
      return true;
    };
    if (!pick()) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        pick();
        continue;
      }
      // Divisibility: fold an offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row(t, i, 1);
            U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return {std::move(U), std::move(D), std::move(V), t};
}

inline auto rank(const IntegerMatrix &M) -> std::size_t {
  return hermite_normal_form(M).rank;
}

/// A basis of the lattice {v in Z^cols : M v = 0}.
inline auto kernel_lattice(const IntegerMatrix &M) -> std::vector<IntVector> {
  auto hf = hermite_normal_form(M.transpose());
  std::vector<IntVector> basis;
  for (std::size_t i = hf.rank; i < hf.H.rows(); ++i) basis.push_back(hf.U.row(i));
  return basis;
}

/// Is v an integer combination of the columns of M?
inline auto in_column_lattice(const IntegerMatrix &M, const IntVector &v)
    -> bool {
  if (v.size() != M.rows()) throw std::invalid_argument("vector length");
  auto sf = smith_normal_form(M);
  IntVector w = sf.U * v;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Integer d = (i < sf.rank) ? sf.D(i, i) : Integer(0);
    if (d == 0) {
      if (w[i] != 0) return false;
    } else if (w[i] % d != 0) {
      return false;
    }
  }
  return true;
}

/// Fraction-free Gaussian elimination.
inline auto determinant(IntegerMatrix A) -> Integer {
  const std::size_t n = A.rows();
  if (n != A.cols()) throw std::invalid_argument("determinant of non-square");
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      A.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

inline auto is_unimodular(const IntegerMatrix &A) -> bool {
  if (A.rows() != A.cols()) return false;
  auto d = determinant(A);
  return d == 1 || d == -1;
}

struct TotalUnimodularityReport {
  bool holds = true;
  bool exhaustive = false;
  std::size_t submatrices_checked = 0;
  std::vector<std::size_t> witness_rows, witness_cols;
};

namespace detail {

inline auto next_combination(std::vector<std::size_t> &idx, std::size_t n)
    -> bool {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline auto det_ok(const Integer &d) -> bool { return d >= -1 && d <= 1; }

} // namespace detail

/// Every square submatrix has determinant in {-1, 0, 1}. Exhaustive when the
/// number of square submatrices is at most `exhaustive_limit`, otherwise
/// `samples` random square submatrices are tested.
inline auto total_unimodularity(const IntegerMatrix &A,
                                std::size_t exhaustive_limit = 2'000'000,
                                std::size_t samples = 20'000,
                                std::uint64_t seed = 1)
    -> TotalUnimodularityReport {
  TotalUnimodularityReport rep;
  const std::size_t m = A.rows(), n = A.cols();
  auto binom = [](std::size_t N, std::size_t K) -> long double {
    long double b = 1;
    for (std::size_t i = 0; i < K; ++i) b = b * (N - i) / (i + 1);
    return b;
  };
  long double total = 0;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) total += binom(m, k) * binom(n, k);

  auto test = [&](const std::vector<std::size_t> &rs,
                  const std::vector<std::size_t> &cs) {
    ++rep.submatrices_checked;
    if (!detail::det_ok(determinant(A.submatrix(rs, cs)))) {
      rep.holds = false;
      rep.witness_rows = rs;
      rep.witness_cols = cs;
    }
  };

  if (total <= static_cast<long double>(exhaustive_limit)) {
    rep.exhaustive = true;
    for (std::size_t k = 1; k <= std::min(m, n) && rep.holds; ++k) {
      std::vector<std::size_t> rs(k);
      for (std::size_t i = 0; i < k; ++i) rs[i] = i;
      do {
        std::vector<std::size_t> cs(k);
        for (std::size_t i = 0; i < k; ++i) cs[i] = i;
        do test(rs, cs);
        while (rep.holds && detail::next_combination(cs, n));
      } while (rep.holds && detail::next_combination(rs, m));
    }
    return rep;
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> allr(m), allc(n);
  for (std::size_t i = 0; i < m; ++i) allr[i] = i;
  for (std::size_t j = 0; j < n; ++j) allc[j] = j;
  std::uniform_int_distribution<std::size_t> kdist(1, std::min(m, n));
  for (std::size_t s = 0; s < samples && rep.holds; ++s) {
    std::size_t k = kdist(rng);
    std::shuffle(allr.begin(), allr.end(), rng);
    std::shuffle(allc.begin(), allc.end(), rng);
    std::vector<std::size_t> rs(allr.begin(), allr.begin() + k),
        cs(allc.begin(), allc.begin() + k);
    std::sort(rs.begin(), rs.end());
    std::sort(cs.begin(), cs.end());
    test(rs, cs);
  }
  return rep;
}

} // namespace qforge
