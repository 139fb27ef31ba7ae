// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vecgo/error.hpp"

namespace vecgo {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

namespace detail {

using PolyQ = std::vector<Rational>;  // low degree first

inline void trim(PolyQ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
inline void poly_divmod(PolyQ a, const PolyQ& b, PolyQ& q, PolyQ& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  r = std::move(a);
}

inline PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
  PolyQ out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Reduction data for Q(zeta_N): Phi_N and x^k mod Phi_N for 0 <= k < N.
struct Field {
  int N = 1;
  int phi = 1;
  std::vector<BigInt> poly;
  std::vector<std::vector<BigInt>> pow;
};

std::vector<BigInt> compute_cyclotomic(int N);

inline const Field& field(int N) {
  static std::recursive_mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return *it->second;
  auto f = std::make_unique<Field>();
  f->N = N;
  f->poly = compute_cyclotomic(N);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  f->pow.assign(N, std::vector<BigInt>(f->phi, BigInt(0)));
  std::vector<BigInt> cur(f->phi, BigInt(0));
  cur[0] = 1;
  if (f->phi == 0) cur.clear();
  for (int k = 0; k < N; ++k) {
    f->pow[k] = cur;
    // multiply by x and reduce with the monic Phi_N
    std::vector<BigInt> next(f->phi, BigInt(0));
    BigInt top = f->phi > 0 ? cur[f->phi - 1] : BigInt(0);
    for (int i = f->phi - 1; i >= 1; --i) next[i] = cur[i - 1];
    for (int i = 0; i < f->phi; ++i) next[i] -= top * f->poly[i];
    cur = std::move(next);
  }
  const Field& ref = *f;
  cache.emplace(N, std::move(f));
  return ref;
}

inline std::vector<BigInt> compute_cyclotomic(int N) {
  // x^N - 1 divided exactly by Phi_d for every proper divisor d.
  PolyQ num(N + 1, Rational(0));
  num[0] = -1;
  num[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    const Field& fd = field(d);
    PolyQ den;
    for (const auto& c : fd.poly) den.emplace_back(c);
    PolyQ q, r;
    poly_divmod(num, den, q, r);
    num = q;
  }
  std::vector<BigInt> out;
  for (const auto& c : num) out.push_back(c.get_num());
  return out;
}

}  // namespace detail

/// Coefficients of Phi_N, lowest degree first.
inline std::vector<BigInt> cyclotomic_polynomial(int N) {
  if (N < 1) fail(ErrorCode::IndexOutOfRange, "cyclotomic_polynomial needs N >= 1");
  return detail::field(N).poly;
}

inline int euler_phi(int N) { return detail::field(N).phi; }

/// Exact element of Q(zeta_N), stored reduced modulo Phi_N.
class Scalar {
 public:
  Scalar() : Scalar(1) {}
  explicit Scalar(int N) : N_(N), c_(detail::field(N).phi, Rational(0)) {}
  Scalar(int N, std::vector<Rational> coeffs) : N_(N), c_(std::move(coeffs)) {
    const auto& f = detail::field(N);
    if (static_cast<int>(c_.size()) > f.phi) reduce_long(c_);
    c_.resize(f.phi, Rational(0));
  }

  static Scalar zero(int N = 1) { return Scalar(N); }
  static Scalar from_rational(const Rational& q, int N = 1) {
    Scalar s(N);
    s.c_[0] = q;
    return s;
  }
  static Scalar one(int N = 1) { return from_rational(Rational(1), N); }
  static Scalar from_int(long v, int N = 1) { return from_rational(Rational(v), N); }
  /// zeta_N^k.
  static Scalar zeta(int N, std::int64_t k = 1) {
    const auto& f = detail::field(N);
    Scalar s(N);
    const auto& p = f.pow[mod(k, N)];
    for (int i = 0; i < f.phi; ++i) s.c_[i] = p[i];
    return s;
  }

  int root_order() const { return N_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  /// Image in Q(zeta_M); requires N | M.
  Scalar embed(int M) const {
    if (M == N_) return *this;
    if (M % N_ != 0) fail(ErrorCode::IndexOutOfRange, "embedding needs N | M");
    const auto& f = detail::field(M);
    Scalar out(M);
    int step = M / N_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const auto& p = f.pow[(i * step) % M];
      for (int j = 0; j < f.phi; ++j)
        if (p[j] != 0) out.c_[j] += c_[i] * p[j];
    }
    return out;
  }

  Scalar operator-() const {
    Scalar out(*this);
    for (auto& q : out.c_) q = -q;
    return out;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.N_ != b.N_) {
      int L = static_cast<int>(lcm64(a.N_, b.N_));
      return a.embed(L) + b.embed(L);
    }
    Scalar out(a);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.N_ != b.N_) {
      int L = static_cast<int>(lcm64(a.N_, b.N_));
      return a.embed(L) * b.embed(L);
    }
    const std::size_t n = a.c_.size();
    std::vector<Rational> conv(n == 0 ? 0 : 2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
    }
    Scalar out(a.N_);
    out.c_ = std::move(conv);
    out.reduce_long(out.c_);
    return out;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm modulo Phi_N.
  Scalar inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero scalar");
    const auto& f = detail::field(N_);
    detail::PolyQ a(c_.begin(), c_.end());
    detail::trim(a);
    detail::PolyQ m;
    for (const auto& c : f.poly) m.emplace_back(c);
    // invariant: s0 * a == r0, s1 * a == r1 (mod m)
    detail::PolyQ r0 = m, r1 = a, s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
      detail::PolyQ q, r;
      detail::poly_divmod(r0, r1, q, r);
      detail::PolyQ s = detail::poly_sub(s0, detail::poly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
      if (r1.empty()) fail(ErrorCode::DivisionByZero, "non-invertible element");
    }
    Rational k = r1[0];
    for (auto& q : s1) q /= k;
    return Scalar(N_, s1);
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar pow(std::int64_t k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result = one(N_), base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.N_ == b.N_) return a.c_ == b.c_;
    int L = static_cast<int>(lcm64(a.N_, b.N_));
    return a.embed(L).c_ == b.embed(L).c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human readable form in the power basis, e.g. "1/2 - z8^3".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      Rational q = c_[i];
      if (q == 0) continue;
      bool neg = q < 0;
      if (neg) q = -q;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      if (i == 0) {
        os << q.get_str();
        continue;
      }
      if (q != 1) os << q.get_str() << "*";
      os << "z" << N_;
      if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
  }

 private:
  // Reduce a coefficient vector of any length modulo Phi_N using x^N = 1.
  void reduce_long(std::vector<Rational>& v) const {
    const auto& f = detail::field(N_);
    if (static_cast<int>(v.size()) <= f.phi) {
      v.resize(f.phi, Rational(0));
      return;
    }
    std::vector<Rational> out(f.phi, Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      if (static_cast<int>(k) < f.phi) {
        out[k] += v[k];
        continue;
      }
      const auto& p = f.pow[k % N_];
      for (int j = 0; j < f.phi; ++j)
        if (p[j] != 0) out[j] += v[k] * p[j];
    }
    v = std::move(out);
  }

  int N_;
  std::vector<Rational> c_;
};

/// zeta_N^e with e reduced mod N.
struct Unit {
  int N = 1;
  std::int64_t e = 0;

  Unit() = default;
  Unit(int N_, std::int64_t e_) : N(N_), e(mod(e_, N_)) {
    if (N_ < 1) fail(ErrorCode::IndexOutOfRange, "unit root order must be positive");
  }

  static Unit one() { return Unit(1, 0); }

  /// Same root of unity written at root order M (requires N | M).
  Unit at(int M) const {
    if (M % N != 0) fail(ErrorCode::IndexOutOfRange, "unit embedding needs N | M");
    return Unit(M, e * (M / N));
  }
  /// Lowest-terms form.
  Unit reduced() const {
    std::int64_t g = std::gcd(e, static_cast<std::int64_t>(N));
    if (g == 0) return Unit(1, 0);
    return Unit(static_cast<int>(N / g), e / g);
  }
  Unit inverse() const { return Unit(N, -e); }
  Unit pow(std::int64_t k) const { return Unit(N, mod(e, N) * mod(k, N)); }
  bool is_one() const { return e == 0; }

  Scalar to_scalar() const { return Scalar::zeta(N, e); }

  friend Unit operator*(const Unit& a, const Unit& b) {
    int L = static_cast<int>(lcm64(a.N, b.N));
    return Unit(L, a.e * (L / a.N) + b.e * (L / b.N));
  }
  friend Unit operator/(const Unit& a, const Unit& b) { return a * b.inverse(); }
  Unit& operator*=(const Unit& o) { return *this = *this * o; }
  friend bool operator==(const Unit& a, const Unit& b) {
    int L = static_cast<int>(lcm64(a.N, b.N));
    return mod(a.e * (L / a.N) - b.e * (L / b.N), L) == 0;
  }
  friend bool operator!=(const Unit& a, const Unit& b) { return !(a == b); }

  std::string to_string() const {
    Unit r = reduced();
    if (r.N == 1) return "1";
    if (r.N == 2) return "-1";
    std::ostringstream os;
    os << "z" << N;
    if (e != 1) os << "^" << e;
    return os.str();
  }
};

/// All r distinct r-th roots of u, written at root order r*N.
inline std::vector<Unit> unit_roots(const Unit& u, int r) {
  if (r < 1) fail(ErrorCode::IndexOutOfRange, "unit_roots needs r >= 1");
  std::vector<Unit> out;
  int M = r * u.N;
  for (int j = 0; j < r; ++j) out.emplace_back(M, u.e + static_cast<std::int64_t>(j) * u.N);
  return out;
}

/// Common root order of a range of scalars.
template <class Range>
int common_root_order(const Range& r) {
  std::int64_t L = 1;
  for (const auto& s : r) L = lcm64(L, s.root_order());
  return static_cast<int>(L);
}

/// If s is a root of unity, return it as a unit at root order lcm(2, N).
inline std::optional<Unit> as_unit(const Scalar& s) {
  int L = static_cast<int>(lcm64(2, s.root_order()));
  Scalar t = s.embed(L);
  for (int k = 0; k < L; ++k)
    if (t == Scalar::zeta(L, k)) return Unit(L, k);
  return std::nullopt;
}

}  // namespace vecgo
