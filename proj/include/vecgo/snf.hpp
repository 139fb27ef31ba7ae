// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "vecgo/scalar.hpp"

namespace vecgo {

/// Dense row-major matrix over a ring of integers.
template <class T>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, T(0)) {}

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rs) {
    DenseMatrix m(static_cast<int>(rs.size()), rs.empty() ? 0 : static_cast<int>(rs[0].size()));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
    return m;
  }

  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (x(i, k) == 0) continue;
        for (int j = 0; j < y.cols; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }
  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

using IntMatrix = DenseMatrix<std::int64_t>;
using BigMatrix = DenseMatrix<BigInt>;

inline BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = BigInt(static_cast<long>(m.a[i]));
  return out;
}

/// U * A * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal of D.
struct SNFResult {
  BigMatrix D, U, V;
  int rank = 0;
  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (int i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

template <class M>
void swap_rows(M& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}
template <class M>
void swap_cols(M& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}
// row_i += f * row_j
inline void add_row(BigMatrix& m, int i, int j, const BigInt& f) {
  for (int c = 0; c < m.cols; ++c)
    if (m(j, c) != 0) m(i, c) += f * m(j, c);
}
inline void add_col(BigMatrix& m, int i, int j, const BigInt& f) {
  for (int r = 0; r < m.rows; ++r)
    if (m(r, j) != 0) m(r, i) += f * m(r, j);
}

}  // namespace detail

/// Smith normal form by row and column reduction, pivoting on the entry of minimal
/// absolute value.
inline SNFResult smith_normal_form(const BigMatrix& A) {
  SNFResult res;
  BigMatrix D = A;
  BigMatrix U = BigMatrix::identity(A.rows);
  BigMatrix V = BigMatrix::identity(A.cols);
  const int n = std::min(A.rows, A.cols);
  int t = 0;
  for (; t < n; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      BigInt best;
      for (int i = t; i < D.rows; ++i)
        for (int j = t; j < D.cols; ++j)
          if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < best)) {
            best = abs(D(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;
      detail::swap_rows(D, t, pi);
      detail::swap_rows(U, t, pi);
      detail::swap_cols(D, t, pj);
      detail::swap_cols(V, t, pj);
      bool dirty = false;
      for (int i = t + 1; i < D.rows; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q = D(i, t) / D(t, t);
        detail::add_row(D, i, t, -q);
        detail::add_row(U, i, t, -q);
        if (D(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < D.cols; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q = D(t, j) / D(t, t);
        detail::add_col(D, j, t, -q);
        detail::add_col(V, j, t, -q);
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // divisibility: fold a row with an entry not divisible by the pivot into row t
      int bad = -1;
      for (int i = t + 1; i < D.rows && bad < 0; ++i)
        for (int j = t + 1; j < D.cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      detail::add_row(D, t, bad, BigInt(1));
      detail::add_row(U, t, bad, BigInt(1));
    }
    if (D(t, t) < 0) {
      for (int c = 0; c < D.cols; ++c) D(t, c) = -D(t, c);
      for (int c = 0; c < U.cols; ++c) U(t, c) = -U(t, c);
    }
  }
done:
  res.rank = t;
  res.D = std::move(D);
  res.U = std::move(U);
  res.V = std::move(V);
  return res;
}

inline SNFResult smith_normal_form(const IntMatrix& A) { return smith_normal_form(to_big(A)); }

namespace detail {

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t x, y;
  std::int64_t g = ext_gcd(mod(a, n), n, x, y);
  if (g != 1) fail(ErrorCode::DivisionByZero, "not invertible modulo n");
  return mod(x, n);
}

}  // namespace detail

/// Diagonalisation P * A * Q = D over Z/N with P, Q invertible mod N, recorded as a list of
/// 2x2 elementary operations so that P, P^-1, Q, Q^-1 can be applied to vectors.
class ModSmith {
 public:
  ModSmith(const IntMatrix& A, std::int64_t N) : N_(N), D_(A) {
    for (auto& v : D_.a) v = mod(v, N_);
    run();
  }

  std::int64_t modulus() const { return N_; }
  int rank() const { return rank_; }
  int rows() const { return D_.rows; }
  int cols() const { return D_.cols; }
  /// Diagonal entries d_0..d_{rank-1}, all nonzero mod N.
  const std::vector<std::int64_t>& diagonal() const { return diag_; }

  std::vector<std::int64_t> apply_P(std::vector<std::int64_t> v) const {
    for (const auto& op : row_ops_) apply(op, v, false);
    return v;
  }
  std::vector<std::int64_t> apply_P_inverse(std::vector<std::int64_t> v) const {
    for (auto it = row_ops_.rbegin(); it != row_ops_.rend(); ++it) apply(*it, v, true);
    return v;
  }
  /// Q * y.
  std::vector<std::int64_t> apply_Q(std::vector<std::int64_t> y) const {
    for (auto it = col_ops_.rbegin(); it != col_ops_.rend(); ++it) apply(*it, y, false);
    return y;
  }
  /// Q^-1 * x.
  std::vector<std::int64_t> apply_Q_inverse(std::vector<std::int64_t> x) const {
    for (const auto& op : col_ops_) apply(op, x, true);
    return x;
  }

  /// Some x with A x = b mod N.
  std::optional<std::vector<std::int64_t>> solve(const std::vector<std::int64_t>& b) const {
    std::vector<std::int64_t> c = apply_P(reduced(b));
    std::vector<std::int64_t> y(D_.cols, 0);
    for (int i = 0; i < D_.rows; ++i) {
      if (i < rank_) {
        std::int64_t d = diag_[i];
        std::int64_t g = std::gcd(d, N_);
        if (c[i] % g != 0) return std::nullopt;
        std::int64_t n = N_ / g;
        y[i] = n == 1 ? 0 : mod((c[i] / g) * detail::inverse_mod(d / g, n), n);
      } else if (c[i] != 0) {
        return std::nullopt;
      }
    }
    return apply_Q(y);
  }

  /// Generators of {x : A x = 0 mod N} paired with their additive orders.
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> kernel_generators() const {
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> out;
    for (int j = 0; j < D_.cols; ++j) {
      std::vector<std::int64_t> y(D_.cols, 0);
      std::int64_t order = N_;
      if (j < rank_) {
        std::int64_t g = std::gcd(diag_[j], N_);
        if (g == 1) continue;
        y[j] = N_ / g;
        order = g;
      } else {
        y[j] = 1;
      }
      out.emplace_back(apply_Q(y), order);
    }
    return out;
  }

 private:
  struct Op {
    bool swap;
    int i, j;
    std::int64_t m00, m01, m10, m11;  // new (v_i, v_j) = M (v_i, v_j)
  };

  std::vector<std::int64_t> reduced(std::vector<std::int64_t> v) const {
    for (auto& x : v) x = mod(x, N_);
    return v;
  }

  void apply(const Op& op, std::vector<std::int64_t>& v, bool inverse) const {
    if (op.swap) {
      std::swap(v[op.i], v[op.j]);
      return;
    }
    std::int64_t a = op.m00, b = op.m01, c = op.m10, d = op.m11;
    if (inverse) {  // determinant is 1
      std::swap(a, d);
      b = -b;
      c = -c;
    }
    std::int64_t vi = v[op.i], vj = v[op.j];
    v[op.i] = mod(mod(a * vi, N_) + mod(b * vj, N_), N_);
    v[op.j] = mod(mod(c * vi, N_) + mod(d * vj, N_), N_);
  }

  // rows (i, j) <- M rows (i, j)
  void row_op(const Op& op) {
    for (int c = 0; c < D_.cols; ++c) {
      std::int64_t x = D_(op.i, c), y = D_(op.j, c);
      if (x == 0 && y == 0) continue;
      D_(op.i, c) = mod(op.m00 * x + op.m01 * y, N_);
      D_(op.j, c) = mod(op.m10 * x + op.m11 * y, N_);
    }
    row_ops_.push_back(op);
  }
  // cols (i, j) <- cols (i, j) M, recorded so that apply() gives F y with F = M^T layout
  void col_op(std::int64_t f_ii, std::int64_t f_ji, std::int64_t f_ij, std::int64_t f_jj, int i, int j) {
    for (int r = 0; r < D_.rows; ++r) {
      std::int64_t x = D_(r, i), y = D_(r, j);
      if (x == 0 && y == 0) continue;
      D_(r, i) = mod(f_ii * x + f_ji * y, N_);
      D_(r, j) = mod(f_ij * x + f_jj * y, N_);
    }
    // F has entries F[i][i]=f_ii, F[i][j]=f_ij, F[j][i]=f_ji, F[j][j]=f_jj; (F y)_i = f_ii y_i + f_ij y_j
    col_ops_.push_back(Op{false, i, j, f_ii, f_ij, f_ji, f_jj});
  }

  void run() {
    const int n = std::min(D_.rows, D_.cols);
    rank_ = 0;
    for (int t = 0; t < n; ++t) {
      int pi = -1, pj = -1;
      std::int64_t best = 0;
      for (int i = t; i < D_.rows; ++i)
        for (int j = t; j < D_.cols; ++j) {
          std::int64_t v = D_(i, j);
          if (v == 0) continue;
          std::int64_t g = std::gcd(v, N_);
          if (pi < 0 || g < best) {
            best = g;
            pi = i;
            pj = j;
            if (g == 1) goto found;
          }
        }
      if (pi < 0) break;
    found:
      if (pi != t) {
        detail::swap_rows(D_, t, pi);
        row_ops_.push_back(Op{true, t, pi, 0, 0, 0, 0});
      }
      if (pj != t) {
        detail::swap_cols(D_, t, pj);
        col_ops_.push_back(Op{true, t, pj, 0, 0, 0, 0});
      }
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (int i = t + 1; i < D_.rows; ++i) {
          std::int64_t q = D_(i, t);
          if (q == 0) continue;
          std::int64_t p = D_(t, t);
          if (q % p == 0) {
            row_op(Op{false, t, i, 1, 0, mod(-(q / p), N_), 1});
          } else {
            std::int64_t s, u;
            std::int64_t g = detail::ext_gcd(p, q, s, u);
            row_op(Op{false, t, i, mod(s, N_), mod(u, N_), mod(-(q / g), N_), mod(p / g, N_)});
            dirty = true;
          }
        }
        for (int j = t + 1; j < D_.cols; ++j) {
          std::int64_t q = D_(t, j);
          if (q == 0) continue;
          std::int64_t p = D_(t, t);
          if (q % p == 0) {
            col_op(1, 0, mod(-(q / p), N_), 1, t, j);
          } else {
            std::int64_t s, u;
            std::int64_t g = detail::ext_gcd(p, q, s, u);
            col_op(mod(s, N_), mod(u, N_), mod(-(q / g), N_), mod(p / g, N_), t, j);
            dirty = true;
          }
        }
        if (!dirty) {
          for (int i = t + 1; i < D_.rows && !dirty; ++i) dirty = D_(i, t) != 0;
        }
      }
      diag_.push_back(D_(t, t));
      ++rank_;
    }
  }

  std::int64_t N_;
  IntMatrix D_;
  int rank_ = 0;
  std::vector<std::int64_t> diag_;
  std::vector<Op> row_ops_;
  std::vector<Op> col_ops_;
};

/// Some x with A x = b (mod N), or nothing when the system is infeasible.
inline std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& A, const std::vector<std::int64_t>& b,
                                                         std::int64_t N) {
  if (static_cast<int>(b.size()) != A.rows) fail(ErrorCode::ShapeMismatch, "right-hand side length");
  if (A.cols == 0) {
    for (auto v : b)
      if (mod(v, N) != 0) return std::nullopt;
    return std::vector<std::int64_t>{};
  }
  if (A.rows == 0) return std::vector<std::int64_t>(A.cols, 0);
  return ModSmith(A, N).solve(b);
}

}  // namespace vecgo
