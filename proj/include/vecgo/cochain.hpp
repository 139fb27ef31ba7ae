// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "vecgo/gset.hpp"
#include "vecgo/scalar.hpp"
#include "vecgo/snf.hpp"

namespace vecgo {

/// n-cochain of G with values in Map(X, mu_N), stored as exponents mod N.
/// Entry (g_1, ..., g_n, x) sits at ((g_1 |G| + g_2) |G| + ... ) |X| + x.
class UnitCochain {
 public:
  UnitCochain() : UnitCochain(0, GSet(), 1) {}
  UnitCochain(int degree, GSet carrier, int N) : n_(degree), X_(std::move(carrier)), N_(N) {
    if (degree < 0) fail(ErrorCode::DegreeMismatch, "negative degree");
    if (N < 1) fail(ErrorCode::IndexOutOfRange, "root order must be positive");
    std::size_t sz = X_.size();
    for (int i = 0; i < n_; ++i) sz *= X_.group().order();
    e_.assign(sz, 0);
  }
  UnitCochain(int degree, GSet carrier, int N, std::vector<std::int64_t> exps)
      : UnitCochain(degree, std::move(carrier), N) {
    if (exps.size() != e_.size()) fail(ErrorCode::ShapeMismatch, "exponent table has wrong length");
    for (std::size_t i = 0; i < exps.size(); ++i) e_[i] = mod(exps[i], N_);
  }

  int degree() const { return n_; }
  const FiniteGroup& group() const { return X_.group(); }
  const GSet& carrier() const { return X_; }
  int root_order() const { return N_; }
  std::size_t size() const { return e_.size(); }
  const std::vector<std::int64_t>& exponents() const { return e_; }

  std::size_t index(const int* args, int x) const {
    std::size_t i = 0;
    for (int k = 0; k < n_; ++k) i = i * group().order() + args[k];
    return i * X_.size() + x;
  }
  std::size_t index(const std::vector<int>& args, int x = 0) const {
    if (static_cast<int>(args.size()) != n_) fail(ErrorCode::DegreeMismatch, "argument count");
    return index(args.data(), x);
  }
  /// Inverse of index(): fills args (length degree) and returns x.
  int decode(std::size_t i, int* args) const {
    int x = static_cast<int>(i % X_.size());
    i /= X_.size();
    for (int k = n_ - 1; k >= 0; --k) {
      args[k] = static_cast<int>(i % group().order());
      i /= group().order();
    }
    return x;
  }

  std::int64_t exponent_at(std::size_t i) const { return e_[i]; }
  std::int64_t exponent(const std::vector<int>& args, int x = 0) const { return e_[index(args, x)]; }
  Unit value_at(std::size_t i) const { return Unit(N_, e_[i]); }
  Unit value(const std::vector<int>& args, int x = 0) const { return value_at(index(args, x)); }
  void set_exponent_at(std::size_t i, std::int64_t v) { e_[i] = mod(v, N_); }
  void set_exponent(const std::vector<int>& args, int x, std::int64_t v) { set_exponent_at(index(args, x), v); }
  void set_value(const std::vector<int>& args, int x, const Unit& u) {
    set_exponent(args, x, u.at(static_cast<int>(lcm64(u.N, N_))).e / (lcm64(u.N, N_) / N_));
    if (value(args, x) != u) fail(ErrorCode::IndexOutOfRange, "value not representable at this root order");
  }

  /// Same values written at root order M (N | M).
  UnitCochain at_root_order(int M) const {
    if (M % N_ != 0) fail(ErrorCode::IndexOutOfRange, "root order must be a multiple of the current one");
    UnitCochain out(n_, X_, M);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * (M / N_);
    return out;
  }

  /// Smallest root order at which every value is representable.
  UnitCochain reduced() const {
    std::int64_t g = N_;
    for (auto v : e_) g = std::gcd(g, v);
    int M = static_cast<int>(N_ / g);
    UnitCochain out(n_, X_, M);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] / g;
    return out;
  }

  UnitCochain inverse() const {
    UnitCochain out(*this);
    for (auto& v : out.e_) v = mod(-v, N_);
    return out;
  }

  bool is_trivial() const {
    for (auto v : e_)
      if (v != 0) return false;
    return true;
  }

  /// Exponent zero whenever some argument is the identity.
  bool is_normalized() const {
    std::vector<int> args(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      decode(i, args.data());
      for (int a : args)
        if (a == group().identity()) return false;
    }
    return true;
  }

  bool same_shape(const UnitCochain& o) const { return n_ == o.n_ && X_ == o.X_; }

  friend UnitCochain operator*(const UnitCochain& a, const UnitCochain& b) {
    if (!a.same_shape(b)) fail(ErrorCode::DegreeMismatch, "cochains of different degree, group or carrier");
    int L = static_cast<int>(lcm64(a.N_, b.N_));
    UnitCochain out(a.n_, a.X_, L);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      out.e_[i] = mod(a.e_[i] * (L / a.N_) + b.e_[i] * (L / b.N_), L);
    return out;
  }

  friend bool operator==(const UnitCochain& a, const UnitCochain& b) {
    if (!a.same_shape(b)) return false;
    std::int64_t L = lcm64(a.N_, b.N_);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (mod(a.e_[i] * (L / a.N_) - b.e_[i] * (L / b.N_), L) != 0) return false;
    return true;
  }
  friend bool operator!=(const UnitCochain& a, const UnitCochain& b) { return !(a == b); }

 private:
  int n_;
  GSet X_;
  int N_;
  std::vector<std::int64_t> e_;
};

inline std::size_t cochain_count(const GSet& X, int n) {
  std::size_t sz = X.size();
  for (int i = 0; i < n; ++i) sz *= X.group().order();
  return sz;
}

/// Integer matrix of d^n : C^n -> C^{n+1} acting on exponent vectors.
inline IntMatrix differential_matrix(const GSet& X, int n) {
  const FiniteGroup& G = X.group();
  UnitCochain src(n, X, 1), dst(n + 1, X, 1);
  IntMatrix D(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  std::vector<int> args(n + 1), sub(std::max(n, 1));
  for (std::size_t r = 0; r < dst.size(); ++r) {
    int x = dst.decode(r, args.data());
    // g_1 acting on the coefficient: f(g_1^-1 x)
    for (int k = 0; k < n; ++k) sub[k] = args[k + 1];
    D(static_cast<int>(r), static_cast<int>(src.index(sub.data(), X.act(G.inv(args[0]), x)))) += 1;
    for (int i = 1; i <= n; ++i) {
      int p = 0;
      for (int k = 0; k < n + 1; ++k) {
        if (k == i - 1) {
          sub[p++] = G.mul(args[k], args[k + 1]);
          ++k;
        } else {
          sub[p++] = args[k];
        }
      }
      D(static_cast<int>(r), static_cast<int>(src.index(sub.data(), x))) += (i % 2 ? -1 : 1);
    }
    for (int k = 0; k < n; ++k) sub[k] = args[k];
    D(static_cast<int>(r), static_cast<int>(src.index(sub.data(), x))) += ((n + 1) % 2 ? -1 : 1);
  }
  return D;
}

inline UnitCochain differential(const UnitCochain& eta) {
  const int n = eta.degree();
  const FiniteGroup& G = eta.group();
  const GSet& X = eta.carrier();
  const std::int64_t N = eta.root_order();
  UnitCochain out(n + 1, X, static_cast<int>(N));
  std::vector<int> args(n + 1), sub(std::max(n, 1));
  for (std::size_t r = 0; r < out.size(); ++r) {
    int x = out.decode(r, args.data());
    std::int64_t acc = 0;
    for (int k = 0; k < n; ++k) sub[k] = args[k + 1];
    acc += eta.exponent_at(eta.index(sub.data(), X.act(G.inv(args[0]), x)));
    for (int i = 1; i <= n; ++i) {
      int p = 0;
      for (int k = 0; k < n + 1; ++k) {
        if (k == i - 1) {
          sub[p++] = G.mul(args[k], args[k + 1]);
          ++k;
        } else {
          sub[p++] = args[k];
        }
      }
      std::int64_t v = eta.exponent_at(eta.index(sub.data(), x));
      acc += (i % 2 ? -v : v);
    }
    for (int k = 0; k < n; ++k) sub[k] = args[k];
    std::int64_t v = eta.exponent_at(eta.index(sub.data(), x));
    acc += ((n + 1) % 2 ? -v : v);
    out.set_exponent_at(r, acc);
  }
  return out;
}

inline bool is_cocycle(const UnitCochain& eta) { return differential(eta).is_trivial(); }

/// Root order at which coboundary questions about eta are decided: N |G|.
inline int lifted_root_order(const UnitCochain& eta) { return eta.root_order() * eta.group().order(); }

/// Some mu valued in mu_M with d mu = eta, or nothing.  N must divide M.
inline std::optional<UnitCochain> coboundary_preimage_at(const UnitCochain& eta, int M) {
  if (eta.degree() == 0) {
    if (eta.is_trivial()) return UnitCochain(0, eta.carrier(), M);
    return std::nullopt;
  }
  UnitCochain lifted = eta.at_root_order(M);
  IntMatrix D = differential_matrix(eta.carrier(), eta.degree() - 1);
  auto sol = solve_mod(D, lifted.exponents(), M);
  if (!sol) return std::nullopt;
  return UnitCochain(eta.degree() - 1, eta.carrier(), M, *sol);
}

/// Preimage at the lifted root order N |G|, which stands in for U(1) coefficients.
inline std::optional<UnitCochain> coboundary_preimage(const UnitCochain& eta) {
  return coboundary_preimage_at(eta, lifted_root_order(eta));
}

inline bool is_coboundary(const UnitCochain& eta) { return coboundary_preimage(eta).has_value(); }

inline bool cohomologous(const UnitCochain& a, const UnitCochain& b) {
  if (!a.same_shape(b)) fail(ErrorCode::DegreeMismatch, "cohomologous needs cochains of the same shape");
  return is_coboundary(a * b.inverse());
}

/// eta * d mu with mu chosen so that the result is normalized.
inline UnitCochain normalize(const UnitCochain& eta) {
  if (eta.is_normalized() || eta.degree() == 0) return eta;
  const int N = eta.root_order();
  IntMatrix D = differential_matrix(eta.carrier(), eta.degree() - 1);
  std::vector<int> rows;
  std::vector<int> args(eta.degree());
  for (std::size_t i = 0; i < eta.size(); ++i) {
    eta.decode(i, args.data());
    for (int a : args)
      if (a == eta.group().identity()) {
        rows.push_back(static_cast<int>(i));
        break;
      }
  }
  IntMatrix sub(static_cast<int>(rows.size()), D.cols);
  std::vector<std::int64_t> rhs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < D.cols; ++c) sub(static_cast<int>(r), c) = D(rows[r], c);
    rhs[r] = -eta.exponent_at(rows[r]);
  }
  auto sol = solve_mod(sub, rhs, N);
  if (!sol) fail(ErrorCode::NotNormalizable, "no normalising coboundary exists at root order " + std::to_string(N));
  UnitCochain mu(eta.degree() - 1, eta.carrier(), N, *sol);
  UnitCochain out = eta * differential(mu);
  if (!out.is_normalized()) fail(ErrorCode::NotNormalizable, "solver returned a non-normalising coboundary");
  return out;
}

/// Representatives of H^n(G, Map(X, mu_M)), one cocycle per class; the zero class first.
inline std::vector<UnitCochain> cohomology_representatives(const GSet& X, int n, int M, std::size_t bound = 1 << 16) {
  IntMatrix Dn = differential_matrix(X, n);
  ModSmith Sn(Dn, M);
  // kernel coordinates y = Q^-1 x; y_j = w_j * step_j with w_j in Z/m_j
  struct Coord {
    int j;
    std::int64_t step;
  };
  std::vector<Coord> coords;
  for (int j = 0; j < Dn.cols; ++j) {
    if (j < Sn.rank()) {
      std::int64_t g = std::gcd(Sn.diagonal()[j], static_cast<std::int64_t>(M));
      if (g > 1) coords.push_back({j, M / g});
    } else {
      coords.push_back({j, 1});
    }
  }
  const int k = static_cast<int>(coords.size());
  std::vector<std::vector<std::int64_t>> relations;
  for (const auto& c : coords) {
    std::vector<std::int64_t> col(k, 0);
    col[&c - coords.data()] = M / c.step;  // order of the coordinate
    relations.push_back(col);
  }
  if (n > 0) {
    IntMatrix Dm = differential_matrix(X, n - 1);
    for (int c = 0; c < Dm.cols; ++c) {
      std::vector<std::int64_t> b(Dm.rows);
      for (int r = 0; r < Dm.rows; ++r) b[r] = mod(Dm(r, c), M);
      std::vector<std::int64_t> y = Sn.apply_Q_inverse(b);
      std::vector<std::int64_t> w(k);
      for (int i = 0; i < k; ++i) w[i] = y[coords[i].j] / coords[i].step;
      relations.push_back(w);
    }
  }
  std::vector<UnitCochain> out;
  if (k == 0) {
    out.emplace_back(n, X, M);
    return out;
  }
  IntMatrix R(k, static_cast<int>(relations.size()));
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (int i = 0; i < k; ++i) R(i, static_cast<int>(c)) = relations[c][i];
  ModSmith SR(R, M);
  std::vector<std::int64_t> orders(k);
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    orders[i] = i < SR.rank() ? std::gcd(SR.diagonal()[i], static_cast<std::int64_t>(M)) : M;
    total *= static_cast<std::size_t>(orders[i]);
    if (total > bound) fail(ErrorCode::EnumerationBoundExceeded, "too many cohomology classes");
  }
  std::vector<std::int64_t> t(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> w = SR.apply_P_inverse(t);
    std::vector<std::int64_t> y(Dn.cols, 0);
    for (int i = 0; i < k; ++i) y[coords[i].j] = mod(w[i] * coords[i].step, M);
    out.emplace_back(n, X, M, Sn.apply_Q(y));
    int p = 0;
    while (p < k && ++t[p] == orders[p]) t[p++] = 0;
  }
  return out;
}

/// The representative family omega_s on Z/n at root order n.
inline UnitCochain omega_cyclic(int n, std::int64_t s) {
  FiniteGroup G = cyclic_group(n);
  UnitCochain w(3, point_gset(G), n);
  s = mod(s, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m) {
        std::int64_t carry = (l + m - (l + m) % n) / n;
        w.set_exponent({k, l, m}, 0, s * k * carry);
      }
  return w;
}

/// Values at the base point, as a cochain on the stabilizing subgroup (point carrier).
/// embedding[i] is the element of G represented by index i of the subgroup.
inline UnitCochain restrict_at_point(const UnitCochain& eta, const Subgroup& H, int x0,
                                     std::vector<int>* embedding = nullptr) {
  std::vector<int> emb;
  FiniteGroup K = subgroup_as_group(eta.group(), H, &emb);
  UnitCochain out(eta.degree(), point_gset(K), eta.root_order());
  std::vector<int> args(eta.degree()), big(eta.degree());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.decode(i, args.data());
    for (int k = 0; k < eta.degree(); ++k) big[k] = emb[args[k]];
    out.set_exponent_at(i, eta.exponent_at(eta.index(big.data(), x0)));
  }
  if (embedding) *embedding = emb;
  return out;
}

inline UnitCochain shapiro_restrict(const UnitCochain& eta, std::vector<int>* embedding = nullptr) {
  const auto& H = eta.carrier().coset_subgroup();
  if (!H) fail(ErrorCode::CarrierNotCosetSpace, "carrier was not constructed as a coset space");
  return restrict_at_point(eta, *H, 0, embedding);
}

/// Copy of a point-carrier cochain across every point of X.
inline UnitCochain inflate(const UnitCochain& eta, const GSet& X) {
  if (eta.carrier().size() != 1) fail(ErrorCode::DegreeMismatch, "inflate needs a point carrier");
  if (eta.group() != X.group()) fail(ErrorCode::DegreeMismatch, "inflate needs the same group");
  UnitCochain out(eta.degree(), X, eta.root_order());
  for (std::size_t i = 0; i < out.size(); ++i) out.set_exponent_at(i, eta.exponent_at(i / X.size()));
  return out;
}

/// (Psi o f)(g.., x) = Psi(g.., f(x)) for f: X -> carrier.
inline UnitCochain compose_carrier(const UnitCochain& eta, const GSet& X, const std::vector<int>& f) {
  UnitCochain out(eta.degree(), X, eta.root_order());
  std::vector<int> args(eta.degree());
  for (std::size_t i = 0; i < out.size(); ++i) {
    int x = out.decode(i, args.data());
    out.set_exponent_at(i, eta.exponent_at(eta.index(args.data(), f[x])));
  }
  return out;
}

/// omega_bar(omega)(g, h, k) = omega^-1(k^-1, h^-1, g^-1).
inline UnitCochain omega_bar(const UnitCochain& w) {
  if (w.degree() != 3) fail(ErrorCode::DegreeMismatch, "omega_bar needs a 3-cochain");
  const FiniteGroup& G = w.group();
  UnitCochain out(3, w.carrier(), w.root_order());
  int a[3];
  for (std::size_t i = 0; i < out.size(); ++i) {
    int x = out.decode(i, a);
    int b[3] = {G.inv(a[2]), G.inv(a[1]), G.inv(a[0])};
    out.set_exponent_at(i, -w.exponent_at(w.index(b, x)));
  }
  return out;
}

/// 3-cochain on G x H: omega_G(g1,g2,g3) omega_H^-1(h3^-1,h2^-1,h1^-1).
inline UnitCochain deligne_omega(const UnitCochain& wG, const UnitCochain& wH) {
  if (wG.degree() != 3 || wH.degree() != 3) fail(ErrorCode::DegreeMismatch, "deligne_omega needs 3-cochains");
  if (wG.carrier().size() != 1 || wH.carrier().size() != 1)
    fail(ErrorCode::DegreeMismatch, "deligne_omega needs point carriers");
  const FiniteGroup& G = wG.group();
  const FiniteGroup& H = wH.group();
  FiniteGroup GH = direct_product(G, H);
  int L = static_cast<int>(lcm64(wG.root_order(), wH.root_order()));
  UnitCochain a = wG.at_root_order(L), b = omega_bar(wH).at_root_order(L);
  UnitCochain out(3, point_gset(GH), L);
  int t[3];
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.decode(i, t);
    int g[3], h[3];
    for (int k = 0; k < 3; ++k) {
      g[k] = pair_first(H, t[k]);
      h[k] = pair_second(H, t[k]);
    }
    out.set_exponent_at(i, a.exponent_at(a.index(g, 0)) + b.exponent_at(b.index(h, 0)));
  }
  return out;
}

/// Characters G -> mu_N as degree-1 cochains with point carrier.
inline std::vector<UnitCochain> characters(const FiniteGroup& G, int N, int bound = 24) {
  if (G.order() > bound) fail(ErrorCode::EnumerationBoundExceeded, "group order exceeds bound");
  std::vector<UnitCochain> out;
  for (const auto& e : character_exponents(G, N)) {
    std::vector<std::int64_t> ex(e.begin(), e.end());
    out.emplace_back(1, point_gset(G), N, ex);
  }
  return out;
}

inline bool is_character(const UnitCochain& k) {
  if (k.degree() != 1 || k.carrier().size() != 1) return false;
  const FiniteGroup& G = k.group();
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      if (mod(k.exponent({G.mul(a, b)}) - k.exponent({a}) - k.exponent({b}), k.root_order()) != 0) return false;
  return true;
}

}  // namespace vecgo
