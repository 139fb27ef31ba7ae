// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vecgo/error.hpp"
#include "vecgo/scalar.hpp"

namespace vecgo {

/// Dense matrix over the cyclotomic numbers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, Scalar::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one();
    return m;
  }
  static Matrix scalar(const Scalar& s) {
    Matrix m(1, 1);
    m(0, 0) = s;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }
  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) fail(ErrorCode::ShapeMismatch, "matrix product of incompatible shapes");
    Matrix out(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (int j = 0; j < y.c_; ++j)
          if (!y(k, j).is_zero()) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& x) {
    Matrix out = x;
    for (auto& v : out.a_) v = s * v;
    return out;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) fail(ErrorCode::ShapeMismatch, "matrix sum of incompatible shapes");
    Matrix out = x;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (x.a_[i] != y.a_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_identity() const { return *this == identity(r_) && r_ == c_; }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < r_; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    }
    return s + "]";
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

/// Row-reduced echelon form in place; returns the pivot columns.
inline std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Scalar inv = m(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

/// Basis of {v : m v = 0}.
inline std::vector<std::vector<Scalar>> kernel_basis(Matrix m) {
  std::vector<int> piv = row_reduce(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<std::vector<Scalar>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero());
    v[f] = Scalar::one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Matrix> try_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one();
  }
  std::vector<int> piv = row_reduce(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) fail(ErrorCode::DivisionByZero, "matrix is singular");
  return *inv;
}

inline bool is_invertible(const Matrix& m) { return try_inverse(m).has_value(); }

inline Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  Matrix out(r, c);
  int i0 = 0, j0 = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out(i0 + i, j0 + j) = b(i, j);
    i0 += b.rows();
    j0 += b.cols();
  }
  return out;
}

}  // namespace vecgo
