#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kacfold/error.hpp"

namespace kacfold {

/// Element of a root lattice Z^I, coordinates in vertex (or orbit) order.
using LatticeVector = std::vector<std::int64_t>;

/// Dense square or rectangular integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorKind::ParseError, "ragged integer matrix");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline LatticeVector unit_vector(std::size_t size, std::size_t i) {
  LatticeVector v(size, 0);
  v.at(i) = 1;
  return v;
}

inline std::int64_t height(const LatticeVector& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

inline bool is_zero(const LatticeVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_nonnegative(const LatticeVector& v) {
  for (auto x : v)
    if (x < 0) return false;
  return true;
}

/// Componentwise a <= b.
inline bool dominated_by(const LatticeVector& a, const LatticeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline LatticeVector operator-(LatticeVector a, const LatticeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline LatticeVector operator*(std::int64_t s, LatticeVector a) {
  for (auto& x : a) x *= s;
  return a;
}

/// xᵀ·M·y for a square M.
inline std::int64_t bilinear(const IntMatrix& m, const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != m.rows() || y.size() != m.cols())
    throw Error(ErrorKind::LatticeMismatch, "vector length does not match the form");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * m(i, j) * y[j];
  }
  return s;
}

inline std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

/// All non-negative vectors of the given length with 1 <= height <= max_height,
/// ordered by height and then lexicographically (largest first coordinate first).
inline std::vector<LatticeVector> nonnegative_vectors_up_to(std::size_t size, std::int64_t max_height) {
  std::vector<LatticeVector> out;
  if (size == 0) return out;
  for (std::int64_t h = 1; h <= max_height; ++h) {
    LatticeVector v(size, 0);
    // compositions of h into `size` parts
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
      if (pos + 1 == size) {
        v[pos] = remaining;
        out.push_back(v);
        return;
      }
      for (std::int64_t x = remaining; x >= 0; --x) {
        v[pos] = x;
        self(self, pos + 1, remaining - x);
      }
    };
    rec(rec, 0, h);
  }
  return out;
}

/// All vectors w with 0 <= w <= bound componentwise, excluding zero.
inline std::vector<LatticeVector> vectors_below(const LatticeVector& bound) {
  std::vector<LatticeVector> out;
  LatticeVector v(bound.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == bound.size()) {
      if (!is_zero(v)) out.push_back(v);
      return;
    }
    for (std::int64_t x = 0; x <= bound[pos]; ++x) {
      v[pos] = x;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace kacfold
