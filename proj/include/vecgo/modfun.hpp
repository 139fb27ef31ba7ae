// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "vecgo/matrix.hpp"
#include "vecgo/modcat.hpp"

namespace vecgo {

/// A module functor between M(X, Psi_X) and M(Y, Psi_Y) in matrix form.  Matrices are stored
/// only where m_xy > 0; other entries are 0 x 0.
struct ModuleFunctorData {
  ModuleCategoryData source, target;
  std::vector<int> mult;  // index x * |Y| + y
  std::vector<Matrix> A;  // index (g * |X| + x) * |Y| + y

  const FiniteGroup& group() const { return source.group(); }
  int nx() const { return source.X.size(); }
  int ny() const { return target.X.size(); }
  int m(int x, int y) const { return mult[static_cast<std::size_t>(x) * ny() + y]; }
  int& m(int x, int y) { return mult[static_cast<std::size_t>(x) * ny() + y]; }
  std::size_t a_index(int g, int x, int y) const { return (static_cast<std::size_t>(g) * nx() + x) * ny() + y; }
  const Matrix& a(int g, int x, int y) const { return A[a_index(g, x, y)]; }
  Matrix& a(int g, int x, int y) { return A[a_index(g, x, y)]; }
};

inline ModuleFunctorData empty_functor(const ModuleCategoryData& source, const ModuleCategoryData& target) {
  ModuleFunctorData F{source, target, {}, {}};
  F.mult.assign(static_cast<std::size_t>(F.nx()) * F.ny(), 0);
  F.A.assign(static_cast<std::size_t>(source.group().order()) * F.nx() * F.ny(), Matrix());
  return F;
}

inline bool same_category(const ModuleCategoryData& a, const ModuleCategoryData& b) {
  return a.group() == b.group() && a.fusion.omega == b.fusion.omega && a.X == b.X && a.psi == b.psi;
}

namespace detail {

/// Psi_X(g, h, (gh) x) Psi_Y^-1(g, h, (gh) y)
inline Unit cond_a_factor(const ModuleCategoryData& S, const ModuleCategoryData& T, int g, int h, int x, int y) {
  const FiniteGroup& G = S.group();
  int gh = G.mul(g, h);
  return S.psi.value({g, h}, S.X.act(gh, x)) * T.psi.value({g, h}, T.X.act(gh, y)).inverse();
}

inline void check_shapes(const ModuleFunctorData& F) {
  if (!(F.source.group() == F.target.group())) fail(ErrorCode::SourceTargetMismatch, "source and target over different groups");
  if (F.mult.size() != static_cast<std::size_t>(F.nx()) * F.ny() ||
      F.A.size() != static_cast<std::size_t>(F.group().order()) * F.nx() * F.ny())
    fail(ErrorCode::ShapeMismatch, "functor tables have the wrong length");
  for (int g = 0; g < F.group().order(); ++g)
    for (int x = 0; x < F.nx(); ++x)
      for (int y = 0; y < F.ny(); ++y) {
        int k = F.m(x, y);
        if (k < 0) fail(ErrorCode::ShapeMismatch, "negative multiplicity");
        const Matrix& a = F.a(g, x, y);
        bool ok = k == 0 ? a.empty() : (a.rows() == k && a.cols() == k);
        if (!ok) fail(ErrorCode::ShapeMismatch, "A matrix shape does not match the multiplicity");
      }
}

}  // namespace detail

inline Report validate_modfun(const ModuleFunctorData& F) {
  detail::check_shapes(F);
  Report rep;
  const FiniteGroup& G = F.group();
  const GSet &X = F.source.X, &Y = F.target.X;
  for (int g = 0; g < G.order(); ++g)
    for (int x = 0; x < F.nx(); ++x)
      for (int y = 0; y < F.ny(); ++y) {
        int a = F.m(x, y), b = F.m(X.act(g, x), Y.act(g, y));
        rep.check(a == b, "multiplicity invariance", {g, x, y}, std::to_string(a), std::to_string(b));
      }
  if (!rep.ok()) return rep;
  for (int x = 0; x < F.nx(); ++x)
    for (int y = 0; y < F.ny(); ++y) {
      if (F.m(x, y) == 0) continue;
      const Matrix& one = F.a(G.identity(), x, y);
      rep.check(one.is_identity(), "identity", {G.identity(), x, y}, one.to_string(), "I");
      for (int g = 0; g < G.order(); ++g)
        rep.check(is_invertible(F.a(g, x, y)), "invertible", {g, x, y}, F.a(g, x, y).to_string(), "invertible");
    }
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (int x = 0; x < F.nx(); ++x)
        for (int y = 0; y < F.ny(); ++y) {
          if (F.m(x, y) == 0) continue;
          Matrix lhs = F.a(G.mul(g, h), x, y);
          Matrix rhs = detail::cond_a_factor(F.source, F.target, g, h, x, y).to_scalar() *
                       (F.a(h, x, y) * F.a(g, X.act(h, x), Y.act(h, y)));
          rep.check(lhs == rhs, "cond_A", {g, h, x, y}, lhs.to_string(), rhs.to_string());
        }
  return rep;
}

/// A family M_xy of m^H_xy x m^F_xy matrices.
struct NatTransData {
  ModuleFunctorData from, to;
  std::vector<Matrix> M;  // index x * |Y| + y
  const Matrix& at(int x, int y) const { return M[static_cast<std::size_t>(x) * from.ny() + y]; }
};

inline Report validate_nat_trans(const NatTransData& eta) {
  const ModuleFunctorData &F = eta.from, &H = eta.to;
  if (!same_category(F.source, H.source) || !same_category(F.target, H.target))
    fail(ErrorCode::SourceTargetMismatch, "functors have different source or target");
  if (eta.M.size() != F.mult.size()) fail(ErrorCode::ShapeMismatch, "natural transformation table has the wrong length");
  for (int x = 0; x < F.nx(); ++x)
    for (int y = 0; y < F.ny(); ++y) {
      const Matrix& m = eta.at(x, y);
      bool ok = (F.m(x, y) == 0 || H.m(x, y) == 0) ? m.empty() : (m.rows() == H.m(x, y) && m.cols() == F.m(x, y));
      if (!ok) fail(ErrorCode::ShapeMismatch, "natural transformation block has the wrong shape");
    }
  Report rep;
  const GSet &X = F.source.X, &Y = F.target.X;
  for (int g = 0; g < F.group().order(); ++g)
    for (int x = 0; x < F.nx(); ++x)
      for (int y = 0; y < F.ny(); ++y) {
        if (F.m(x, y) == 0 || H.m(x, y) == 0) continue;
        Matrix lhs = eta.at(x, y) * F.a(g, x, y);
        Matrix rhs = H.a(g, x, y) * eta.at(X.act(g, x), Y.act(g, y));
        rep.check(lhs == rhs, "cond_M", {g, x, y}, lhs.to_string(), rhs.to_string());
      }
  return rep;
}

inline NatTransData identity_nat_trans(const ModuleFunctorData& F) {
  NatTransData eta{F, F, std::vector<Matrix>(F.mult.size())};
  for (std::size_t i = 0; i < F.mult.size(); ++i)
    if (F.mult[i] > 0) eta.M[i] = Matrix::identity(F.mult[i]);
  return eta;
}

/// Basis of the space of natural transformations F => H (solutions of cond_M).
inline std::vector<NatTransData> nat_trans_basis(const ModuleFunctorData& F, const ModuleFunctorData& H) {
  if (!same_category(F.source, H.source) || !same_category(F.target, H.target))
    fail(ErrorCode::SourceTargetMismatch, "functors have different source or target");
  const int nx = F.nx(), ny = F.ny();
  std::vector<int> offset(static_cast<std::size_t>(nx) * ny, -1);
  int nvars = 0;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (F.m(x, y) > 0 && H.m(x, y) > 0) {
        offset[static_cast<std::size_t>(x) * ny + y] = nvars;
        nvars += F.m(x, y) * H.m(x, y);
      }
  std::vector<NatTransData> out;
  if (nvars == 0) return out;
  const FiniteGroup& G = F.group();
  const GSet &X = F.source.X, &Y = F.target.X;
  std::vector<std::vector<std::pair<int, Scalar>>> rows;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) {
        int o = offset[static_cast<std::size_t>(x) * ny + y];
        if (o < 0) continue;
        int gx = X.act(g, x), gy = Y.act(g, y);
        int og = offset[static_cast<std::size_t>(gx) * ny + gy];
        int mf = F.m(x, y), mh = H.m(x, y);
        const Matrix &AF = F.a(g, x, y), &AH = H.a(g, x, y);
        for (int i = 0; i < mh; ++i)
          for (int j = 0; j < mf; ++j) {
            std::vector<std::pair<int, Scalar>> row;
            for (int k = 0; k < mf; ++k)
              if (!AF(k, j).is_zero()) row.push_back({o + i * mf + k, AF(k, j)});
            for (int k = 0; k < mh; ++k)
              if (!AH(i, k).is_zero()) row.push_back({og + k * mf + j, -AH(i, k)});
            rows.push_back(std::move(row));
          }
      }
  }
  Matrix sys(static_cast<int>(rows.size()), nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto& [c, v] : rows[r]) sys(static_cast<int>(r), c) += v;
  for (const auto& v : kernel_basis(sys)) {
    NatTransData eta{F, H, std::vector<Matrix>(static_cast<std::size_t>(nx) * ny)};
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) {
        int o = offset[static_cast<std::size_t>(x) * ny + y];
        if (o < 0) continue;
        int mf = F.m(x, y), mh = H.m(x, y);
        Matrix m(mh, mf);
        for (int i = 0; i < mh; ++i)
          for (int j = 0; j < mf; ++j) m(i, j) = v[o + i * mf + j];
        eta.M[static_cast<std::size_t>(x) * ny + y] = m;
      }
    out.push_back(std::move(eta));
  }
  return out;
}

inline int hom_dimension(const ModuleFunctorData& F, const ModuleFunctorData& H) {
  return static_cast<int>(nat_trans_basis(F, H).size());
}

inline bool is_invertible(const NatTransData& eta) {
  for (std::size_t i = 0; i < eta.M.size(); ++i) {
    if (eta.from.mult[i] != eta.to.mult[i]) return false;
    if (eta.from.mult[i] > 0 && !is_invertible(eta.M[i])) return false;
  }
  return true;
}

/// Searches the hom space for an invertible natural transformation: basis vectors first,
/// then seeded random integer combinations.
inline std::optional<NatTransData> find_invertible_nat_trans(const ModuleFunctorData& F, const ModuleFunctorData& H,
                                                             unsigned seed = 1, int attempts = 32) {
  if (F.mult != H.mult) return std::nullopt;
  auto basis = nat_trans_basis(F, H);
  if (basis.empty()) return std::nullopt;
  for (const auto& b : basis)
    if (is_invertible(b)) return b;
  std::mt19937 rng(seed);
  for (int t = 0; t < attempts; ++t) {
    NatTransData eta = basis[0];
    for (auto& m : eta.M) m = Matrix(m.rows(), m.cols());
    for (const auto& b : basis) {
      Scalar c = Scalar::from_int(static_cast<long>(rng() % 7) - 3);
      for (std::size_t i = 0; i < eta.M.size(); ++i)
        if (!eta.M[i].empty()) eta.M[i] = eta.M[i] + c * b.M[i];
    }
    if (is_invertible(eta)) return eta;
  }
  return std::nullopt;
}

inline ModuleFunctorData identity_functor(const ModuleCategoryData& M) {
  ModuleFunctorData F = empty_functor(M, M);
  for (int x = 0; x < F.nx(); ++x) {
    F.m(x, x) = 1;
    for (int g = 0; g < M.group().order(); ++g) F.a(g, x, x) = Matrix::identity(1);
  }
  return F;
}

/// Lambda with d Lambda = Psi_X^-1 (Psi_Y o f), if one exists.
inline std::optional<UnitCochain> solve_lambda(const ModuleCategoryData& S, const ModuleCategoryData& T,
                                               const std::vector<int>& f) {
  if (!is_equivariant(S.X, T.X, f)) fail(ErrorCode::NotEquivariant, "map is not G-equivariant");
  UnitCochain rhs = S.psi.inverse() * compose_carrier(T.psi, S.X, f);
  auto lam = coboundary_preimage(rhs);
  if (!lam) return std::nullopt;
  return lam->reduced();
}

/// F_{f, Lambda}: m_xy = [f(x) = y], A_{g, x, f(x)} = Lambda(g, g x).
inline ModuleFunctorData functor_from_equivariant(const ModuleCategoryData& S, const ModuleCategoryData& T,
                                                  const std::vector<int>& f, const UnitCochain& lambda) {
  if (!(S.group() == T.group())) fail(ErrorCode::SourceTargetMismatch, "source and target over different groups");
  if (!is_equivariant(S.X, T.X, f)) fail(ErrorCode::NotEquivariant, "map is not G-equivariant");
  if (lambda.degree() != 1 || !(lambda.carrier() == S.X)) fail(ErrorCode::ShapeMismatch, "Lambda must be a 1-cochain on X");
  UnitCochain rhs = S.psi.inverse() * compose_carrier(T.psi, S.X, f);
  UnitCochain d = differential(lambda);
  if (d != rhs) {
    std::vector<int> a(2);
    for (std::size_t i = 0; i < d.size(); ++i) {
      int x = d.decode(i, a.data());
      if (d.value_at(i) != rhs.value_at(i))
        fail(ErrorCode::LambdaConditionFailed, "d Lambda differs at (" + std::to_string(a[0]) + "," +
                                                  std::to_string(a[1]) + "," + std::to_string(x) + ")");
    }
  }
  ModuleFunctorData F = empty_functor(S, T);
  const FiniteGroup& G = S.group();
  for (int x = 0; x < F.nx(); ++x) {
    F.m(x, f[x]) = 1;
    for (int g = 0; g < G.order(); ++g) F.a(g, x, f[x]) = Matrix::scalar(lambda.value({g}, S.X.act(g, x)).to_scalar());
  }
  return F;
}

inline ModuleFunctorData direct_sum(const std::vector<ModuleFunctorData>& parts) {
  if (parts.empty()) fail(ErrorCode::SourceTargetMismatch, "direct sum of no functors");
  for (const auto& p : parts)
    if (!same_category(p.source, parts[0].source) || !same_category(p.target, parts[0].target))
      fail(ErrorCode::SourceTargetMismatch, "summands have different source or target");
  ModuleFunctorData S = empty_functor(parts[0].source, parts[0].target);
  for (std::size_t i = 0; i < S.mult.size(); ++i)
    for (const auto& p : parts) S.mult[i] += p.mult[i];
  for (std::size_t i = 0; i < S.A.size(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts)
      if (!p.A[i].empty()) blocks.push_back(p.A[i]);
    if (!blocks.empty()) S.A[i] = block_diagonal(blocks);
  }
  return S;
}

/// Orbits of X x Y under the diagonal action, each sorted, ordered by minimal element.
inline std::vector<std::vector<std::pair<int, int>>> pair_orbits(const GSet& X, const GSet& Y) {
  const FiniteGroup& G = X.group();
  std::vector<int> seen(static_cast<std::size_t>(X.size()) * Y.size(), 0);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y) {
      if (seen[static_cast<std::size_t>(x) * Y.size() + y]) continue;
      std::vector<std::pair<int, int>> orb;
      for (int g = 0; g < G.order(); ++g) {
        int gx = X.act(g, x), gy = Y.act(g, y);
        auto& s = seen[static_cast<std::size_t>(gx) * Y.size() + gy];
        if (!s) {
          s = 1;
          orb.push_back({gx, gy});
        }
      }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
  return out;
}

struct FunctorPart {
  std::vector<std::pair<int, int>> orbit;
  ModuleFunctorData functor;
};

/// Restrictions of F to the orbits of X x Y it is supported on.
inline std::vector<FunctorPart> orbit_decompose(const ModuleFunctorData& F) {
  std::vector<FunctorPart> out;
  const FiniteGroup& G = F.group();
  for (auto& orb : pair_orbits(F.source.X, F.target.X)) {
    if (F.m(orb[0].first, orb[0].second) == 0) continue;
    ModuleFunctorData P = empty_functor(F.source, F.target);
    for (auto [x, y] : orb) {
      P.m(x, y) = F.m(x, y);
      for (int g = 0; g < G.order(); ++g) P.a(g, x, y) = F.a(g, x, y);
    }
    out.push_back({orb, std::move(P)});
  }
  return out;
}

/// Right adjoint: A^r_{g, y, x} = Psi_X(g, g^-1, g x) Psi_Y^-1(g, g^-1, g y) (A_{g^-1, g x, g y})^T.
inline ModuleFunctorData adjoint(const ModuleFunctorData& F) {
  ModuleFunctorData R = empty_functor(F.target, F.source);
  const FiniteGroup& G = F.group();
  const GSet &X = F.source.X, &Y = F.target.X;
  for (int x = 0; x < F.nx(); ++x)
    for (int y = 0; y < F.ny(); ++y) {
      R.m(y, x) = F.m(x, y);
      if (F.m(x, y) == 0) continue;
      for (int g = 0; g < G.order(); ++g) {
        int gi = G.inv(g), gx = X.act(g, x), gy = Y.act(g, y);
        Unit c = F.source.psi.value({g, gi}, gx) * F.target.psi.value({g, gi}, gy).inverse();
        R.a(g, y, x) = c.to_scalar() * F.a(gi, gx, gy).transpose();
      }
    }
  return R;
}

/// Transport along P: A'_{g, x, y} = P_xy^-1 A_{g, x, y} P_{gx, gy}.  P^-1 is a natural
/// isomorphism F => F'.
inline ModuleFunctorData conjugate_functor(const ModuleFunctorData& F, const std::vector<Matrix>& P) {
  ModuleFunctorData out = F;
  const GSet &X = F.source.X, &Y = F.target.X;
  for (int g = 0; g < F.group().order(); ++g)
    for (int x = 0; x < F.nx(); ++x)
      for (int y = 0; y < F.ny(); ++y) {
        if (F.m(x, y) == 0) continue;
        const Matrix& p = P[static_cast<std::size_t>(x) * F.ny() + y];
        out.a(g, x, y) = inverse(p) * F.a(g, x, y) * P[static_cast<std::size_t>(X.act(g, x)) * F.ny() + Y.act(g, y)];
      }
  return out;
}

/// A simple functor F_{Gamma, [xi]} over a cyclic group.
struct SimpleFunctor {
  std::vector<std::pair<int, int>> orbit;
  Unit xi;
  ModuleFunctorData functor;
};

namespace detail {

inline int cyclic_gen_or_fail(const FiniteGroup& G) {
  int g = cyclic_generator(G);
  if (g < 0) fail(ErrorCode::NotCyclic, "group is not cyclic");
  return g;
}

}  // namespace detail

inline std::size_t count_simple_cyclic(const ModuleCategoryData& S, const ModuleCategoryData& T) {
  const FiniteGroup& G = S.group();
  detail::cyclic_gen_or_fail(G);
  if (!(T.group() == G)) fail(ErrorCode::SourceTargetMismatch, "source and target over different groups");
  std::size_t n = 0;
  for (const auto& orb : pair_orbits(S.X, T.X)) n += G.order() / orb.size();
  return n;
}

inline std::vector<SimpleFunctor> classify_simple_cyclic(const ModuleCategoryData& S, const ModuleCategoryData& T) {
  const FiniteGroup& G = S.group();
  const int gen = detail::cyclic_gen_or_fail(G);
  if (!(T.group() == G)) fail(ErrorCode::SourceTargetMismatch, "source and target over different groups");
  const int n = G.order();
  std::vector<int> pw(n + 1, G.identity());
  for (int t = 1; t <= n; ++t) pw[t] = G.mul(gen, pw[t - 1]);
  // c(t; x, y) = Psi_X(1, t, (t+1) x) Psi_Y^-1(1, t, (t+1) y)
  auto c = [&](int t, int x, int y) {
    return S.psi.value({gen, pw[t]}, S.X.act(pw[t + 1], x)) * T.psi.value({gen, pw[t]}, T.X.act(pw[t + 1], y)).inverse();
  };
  std::vector<SimpleFunctor> out;
  for (const auto& orb : pair_orbits(S.X, T.X)) {
    auto [x, y] = orb[0];
    const int r = static_cast<int>(orb.size());
    Unit gamma = Unit::one();
    for (int t = 1; t < n; ++t) gamma *= c(t, x, y).inverse();
    auto roots = unit_roots(gamma, n);
    std::sort(roots.begin(), roots.end(), [](const Unit& a, const Unit& b) { return a.e < b.e; });
    std::vector<Unit> classes;
    for (const auto& xi : roots) {
      bool dup = false;
      for (const auto& k : classes) dup |= k.pow(r) == xi.pow(r);
      if (!dup) classes.push_back(xi);
    }
    for (const auto& xi : classes) {
      ModuleFunctorData F = empty_functor(S, T);
      for (auto [px, py] : orb) {
        F.m(px, py) = 1;
        Unit acc = Unit::one();
        for (int k = 0; k < n; ++k) {
          if (k >= 2) acc *= c(k - 1, px, py);
          F.a(pw[k], px, py) = Matrix::scalar((xi.pow(k) * acc).to_scalar());
        }
      }
      out.push_back({orb, xi.reduced(), std::move(F)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Bimodule functors

struct BimoduleFunctorData {
  BimoduleCategoryData source, target;
  std::vector<int> mult;  // x * |Y| + y
  std::vector<Matrix> A;  // (g * |X| + x) * |Y| + y, g in G
  std::vector<Matrix> B;  // (h * |X| + x) * |Y| + y, h in H

  int nx() const { return source.X.size(); }
  int ny() const { return target.X.size(); }
  int m(int x, int y) const { return mult[static_cast<std::size_t>(x) * ny() + y]; }
  std::size_t index(int g, int x, int y) const { return (static_cast<std::size_t>(g) * nx() + x) * ny() + y; }
  const Matrix& a(int g, int x, int y) const { return A[index(g, x, y)]; }
  const Matrix& b(int h, int x, int y) const { return B[index(h, x, y)]; }
};

inline ModuleCategoryData left_part(const BimoduleCategoryData& B) {
  return ModuleCategoryData{B.left, restrict_to_left(B.X, B.G(), B.H()), B.psi};
}

inline Report validate_bimodfun(const BimoduleFunctorData& F) {
  const BimoduleCategoryData &S = F.source, &T = F.target;
  if (!(S.G() == T.G()) || !(S.H() == T.H())) fail(ErrorCode::SourceTargetMismatch, "bimodule categories over different groups");
  const FiniteGroup &G = S.G(), &H = S.H();
  if (F.B.size() != static_cast<std::size_t>(H.order()) * F.nx() * F.ny())
    fail(ErrorCode::ShapeMismatch, "B table has the wrong length");
  ModuleFunctorData left{left_part(S), left_part(T), F.mult, F.A};
  Report rep = validate_modfun(left);
  for (auto& v : rep.violations) v.condition = "A " + v.condition;
  if (!rep.ok()) return rep;
  for (int h = 0; h < H.order(); ++h)
    for (int x = 0; x < F.nx(); ++x)
      for (int y = 0; y < F.ny(); ++y) {
        int k = F.m(x, y);
        const Matrix& b = F.b(h, x, y);
        if (!(k == 0 ? b.empty() : (b.rows() == k && b.cols() == k)))
          fail(ErrorCode::ShapeMismatch, "B matrix shape does not match the multiplicity");
        int k2 = F.m(S.hx(h, x), T.hx(h, y));
        rep.check(k == k2, "multiplicity invariance (H)", {h, x, y}, std::to_string(k), std::to_string(k2));
      }
  if (!rep.ok()) return rep;
  for (int x = 0; x < F.nx(); ++x)
    for (int y = 0; y < F.ny(); ++y) {
      if (F.m(x, y) == 0) continue;
      rep.check(F.b(H.identity(), x, y).is_identity(), "B identity", {H.identity(), x, y},
                F.b(H.identity(), x, y).to_string(), "I");
      for (int h = 0; h < H.order(); ++h)
        rep.check(is_invertible(F.b(h, x, y)), "B invertible", {h, x, y}, F.b(h, x, y).to_string(), "invertible");
    }
  // B_{gh} = Phi_X(h^-1, g^-1, (gh)^-1 x) Phi_Y^-1(h^-1, g^-1, (gh)^-1 y) B_g B_{h, g^-1 x, g^-1 y}
  for (int g = 0; g < H.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      for (int x = 0; x < F.nx(); ++x)
        for (int y = 0; y < F.ny(); ++y) {
          if (F.m(x, y) == 0) continue;
          int gh = H.mul(g, h), ghi = H.inv(gh), gi = H.inv(g), hi = H.inv(h);
          Unit c = S.phi.value({hi, gi}, S.hx(ghi, x)) * T.phi.value({hi, gi}, T.hx(ghi, y)).inverse();
          Matrix lhs = F.b(gh, x, y);
          Matrix rhs = c.to_scalar() * (F.b(g, x, y) * F.b(h, S.hx(gi, x), T.hx(gi, y)));
          rep.check(lhs == rhs, "B pentagon", {g, h, x, y}, lhs.to_string(), rhs.to_string());
        }
  // Omega_X(g, h^-1, (g, h^-1) x) B_{h, x, y} A_{g, h^-1 x, h^-1 y}
  //   = Omega_Y(g, h^-1, (g, h^-1) y) A_{g, x, y} B_{h, g x, g y}
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      for (int x = 0; x < F.nx(); ++x)
        for (int y = 0; y < F.ny(); ++y) {
          if (F.m(x, y) == 0) continue;
          int hi = H.inv(h);
          int sx = S.gx(g, S.hx(hi, x)), ty = T.gx(g, T.hx(hi, y));
          Matrix lhs = S.omega.value(g, hi, sx).to_scalar() * (F.b(h, x, y) * F.a(g, S.hx(hi, x), T.hx(hi, y)));
          Matrix rhs = T.omega.value(g, hi, ty).to_scalar() * (F.a(g, x, y) * F.b(h, S.gx(g, x), T.gx(g, y)));
          rep.check(lhs == rhs, "hexagon", {g, h, x, y}, lhs.to_string(), rhs.to_string());
        }
  return rep;
}

/// A~_{(g, h), x, y} = A_{g, x, y} B_{h^-1, g x, g y}
inline ModuleFunctorData bimodfun_to_deligne(const BimoduleFunctorData& F) {
  const FiniteGroup &G = F.source.G(), &H = F.source.H();
  ModuleFunctorData K = empty_functor(bimod_to_deligne(F.source), bimod_to_deligne(F.target));
  K.mult = F.mult;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      for (int x = 0; x < F.nx(); ++x)
        for (int y = 0; y < F.ny(); ++y) {
          if (F.m(x, y) == 0) continue;
          K.a(pair_index(H, g, h), x, y) = F.a(g, x, y) * F.b(H.inv(h), F.source.gx(g, x), F.target.gx(g, y));
        }
  return K;
}

/// A' = A~_{(g, 1)}, B'_h = A~_{(1, h^-1)}.  Source and target must satisfy Gamma((1, h), (g, 1), x) = 1.
inline BimoduleFunctorData deligne_to_bimodfun(const ModuleFunctorData& K, const FusionData& left, const FusionData& right) {
  const FiniteGroup &G = left.group(), &H = right.group();
  for (const auto* M : {&K.source, &K.target})
    if (gamma_normalize(M->psi, G, H) != M->psi)
      fail(ErrorCode::NotNormalized, "Deligne module category does not satisfy Gamma((1,h),(g,1),x) = 1");
  BimoduleFunctorData F{deligne_to_bimod(K.source, left, right), deligne_to_bimod(K.target, left, right), K.mult, {}, {}};
  F.A.assign(static_cast<std::size_t>(G.order()) * F.nx() * F.ny(), Matrix());
  F.B.assign(static_cast<std::size_t>(H.order()) * F.nx() * F.ny(), Matrix());
  for (int x = 0; x < F.nx(); ++x)
    for (int y = 0; y < F.ny(); ++y) {
      if (F.m(x, y) == 0) continue;
      for (int g = 0; g < G.order(); ++g) F.A[F.index(g, x, y)] = K.a(pair_index(H, g, H.identity()), x, y);
      for (int h = 0; h < H.order(); ++h) F.B[F.index(h, x, y)] = K.a(pair_index(H, G.identity(), H.inv(h)), x, y);
    }
  return F;
}

}  // namespace vecgo
