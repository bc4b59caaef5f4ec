#pragma once

// Exact rank and linear solve over Q.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smt/error.hpp"
#include "smt/rational.hpp"

namespace smt {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
  }
  /// Matrix unit E_ij (0-based).
  static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    RationalMatrix E(n, n);
    E(i, j) = 1;
    return E;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Sparse integer row: (column, value) pairs with increasing column.
using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

/// Rank of an integer matrix given by sparse rows, by fraction-free (Bareiss)
/// elimination with first-nonzero pivoting. Rows are consumed.
inline std::size_t bareiss_rank(std::vector<IntRow> rows, std::size_t ncols) {
  // Dense working copy; the systems here are a few thousand entries wide at most.
  const std::size_t nrows = rows.size();
  if (nrows == 0 || ncols == 0) return 0;
  std::vector<std::vector<mpz_class>> a(nrows, std::vector<mpz_class>(ncols));
  for (std::size_t r = 0; r < nrows; ++r)
    for (auto& [c, v] : rows[r]) {
      if (c >= ncols) throw InvariantError("column index out of range in bareiss_rank");
      a[r][c] = std::move(v);
    }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && sgn(a[piv][col]) == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[rank]);
    const mpz_class& p = a[rank][col];
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      const mpz_class f = a[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        if (sgn(f) == 0 && sgn(a[r][c]) == 0) continue;
        a[r][c] = (a[r][c] * p - a[rank][c] * f) / prev;
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

/// Scales a rational row to a primitive integer row (common denominator cleared).
inline IntRow integer_row(const std::vector<std::pair<std::size_t, Rational>>& row) {
  mpz_class den = 1;
  for (auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (sgn(v) == 0) continue;
    mpz_class x = v.get_num() * (den / v.get_den());
    out.emplace_back(c, std::move(x));
  }
  return out;
}

/// Solution of A x = b over Q for a matrix given column by column (sparse).
/// Returns nullopt when inconsistent; `unique` reports whether the columns are independent.
struct SolveResult {
  std::vector<Rational> x;
  bool unique = false;
};

inline std::optional<SolveResult> solve_columns(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& columns,
                                                const std::vector<std::pair<std::size_t, Rational>>& rhs,
                                                std::size_t nrows) {
  const std::size_t ncols = columns.size();
  // Augmented dense matrix [A | b].
  std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols + 1));
  for (std::size_t c = 0; c < ncols; ++c)
    for (auto& [r, v] : columns[c]) a.at(r)[c] = v;
  for (auto& [r, v] : rhs) a.at(r)[ncols] = v;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t piv = row;
    while (piv < nrows && sgn(a[piv][col]) == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t c = col; c <= ncols; ++c) a[row][c] *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= ncols; ++c)
        if (sgn(a[row][c]) != 0) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < nrows; ++r)
    if (sgn(a[r][ncols]) != 0) return std::nullopt;
  SolveResult out;
  out.x.assign(ncols, 0);
  for (std::size_t k = 0; k < pivot_col.size(); ++k) out.x[pivot_col[k]] = a[k][ncols];
  out.unique = pivot_col.size() == ncols;
  return out;
}

}  // namespace smt
