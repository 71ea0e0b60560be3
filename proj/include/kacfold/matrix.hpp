#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kacfold/error.hpp"
#include "kacfold/field.hpp"

namespace kacfold {

/// Dense row-major matrix of field elements. Arithmetic takes the field explicitly.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (rows[i].size() != m.cols) throw Error(ErrorKind::ParseError, "ragged matrix");
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool is_zero() const {
    for (Elem x : data)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Matrix&) const = default;
  auto operator<=>(const Matrix& o) const {
    if (auto c = rows <=> o.rows; c != 0) return c;
    if (auto c = cols <=> o.cols; c != 0) return c;
    return data <=> o.data;
  }
};

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::LatticeMismatch, "matrix shapes do not compose");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

inline Matrix add(const FiniteField& f, Matrix a, const Matrix& b) {
  for (std::size_t k = 0; k < a.data.size(); ++k) a.data[k] = f.add(a.data[k], b.data[k]);
  return a;
}

inline Matrix subtract(const FiniteField& f, Matrix a, const Matrix& b) {
  for (std::size_t k = 0; k < a.data.size(); ++k) a.data[k] = f.sub(a.data[k], b.data[k]);
  return a;
}

inline Matrix scale(const FiniteField& f, Elem s, Matrix a) {
  for (auto& x : a.data) x = f.mul(s, x);
  return a;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

/// Columns [c0, c0 + n) of a.
inline Matrix column_block(const Matrix& a, std::size_t c0, std::size_t n) {
  Matrix b(a.rows, n);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, c0 + j);
  return b;
}

/// Rows [r0, r0 + n) of a.
inline Matrix row_block(const Matrix& a, std::size_t r0, std::size_t n) {
  Matrix b(n, a.cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) b(i, j) = a(r0 + i, j);
  return b;
}

inline Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols;
  Matrix m(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j) m(i, c0 + j) = b(i, j);
    c0 += b.cols;
  }
  return m;
}

inline Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows;
  Matrix m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
    r0 += b.rows;
  }
  return m;
}

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form; pivots are normalised to 1.
inline RowEchelon rref(const FiniteField& f, Matrix a) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t p = row;
    while (p < a.rows && a(p, col) == 0) ++p;
    if (p == a.rows) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(p, j), a(row, j));
    const Elem inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols; ++j) a(row, j) = f.mul(inv, a(row, j));
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row) continue;
      const Elem factor = a(r, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

inline std::size_t rank(const FiniteField& f, const Matrix& a) { return rref(f, a).rank(); }

/// Basis of {x : a x = 0} as the columns of a (cols x k) matrix, one basis
/// vector per free column in increasing order.
inline Matrix nullspace(const FiniteField& f, const Matrix& a) {
  const RowEchelon e = rref(f, a);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(a.cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = f.neg(e.reduced(r, free_cols[k]));
  }
  return basis;
}

/// Basis of {y : y a = 0} as the rows of a (k x rows) matrix.
inline Matrix left_nullspace(const FiniteField& f, const Matrix& a) { return transpose(nullspace(f, transpose(a))); }

/// Basis of the column space, as the pivot columns of a.
inline Matrix column_space(const FiniteField& f, const Matrix& a) {
  const RowEchelon e = rref(f, a);
  Matrix basis(a.rows, e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < a.rows; ++i) basis(i, k) = a(i, e.pivots[k]);
  return basis;
}

inline std::optional<Matrix> inverse(const FiniteField& f, const Matrix& a) {
  if (a.rows != a.cols) return std::nullopt;
  const std::size_t n = a.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(f, aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return column_block(e.reduced, n, n);
}

inline bool is_invertible(const FiniteField& f, const Matrix& a) {
  return a.rows == a.cols && rank(f, a) == a.rows;
}

inline Matrix power(const FiniteField& f, Matrix a, std::uint64_t e) {
  Matrix result = identity_matrix(a.rows);
  while (e > 0) {
    if (e & 1) result = multiply(f, result, a);
    a = multiply(f, a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace kacfold
