// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "vecgo/fusion.hpp"
#include "vecgo/report.hpp"

namespace vecgo {

/// Module category M(X, Psi) over Vec_G^omega.
struct ModuleCategoryData {
  FusionData fusion;
  GSet X;
  UnitCochain psi;  // degree 2, carrier X

  const FiniteGroup& group() const { return fusion.group(); }
};

inline Report validate_modcat(const ModuleCategoryData& M) {
  Report rep;
  const FiniteGroup& G = M.group();
  if (!(M.X.group() == G)) fail(ErrorCode::ShapeMismatch, "G-set is over a different group");
  if (M.psi.degree() != 2 || !(M.psi.carrier() == M.X)) fail(ErrorCode::ShapeMismatch, "psi must be a 2-cochain on X");
  const UnitCochain& psi = M.psi;
  for (int g = 0; g < G.order(); ++g)
    for (int x = 0; x < M.X.size(); ++x) {
      int e = G.identity();
      for (auto args : {std::vector<int>{e, g}, std::vector<int>{g, e}}) {
        Unit v = psi.value(args, x);
        rep.check(v == Unit(1, 0), "normalized", {args[0], args[1], x}, v.to_string(), "1");
      }
    }
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (int k = 0; k < G.order(); ++k)
        for (int x = 0; x < M.X.size(); ++x) {
          Unit lhs = psi.value({h, k}, M.X.act(G.inv(g), x)) * psi.value({G.mul(g, h), k}, x).inverse() *
                     psi.value({g, G.mul(h, k)}, x) * psi.value({g, h}, x).inverse();
          Unit rhs = M.fusion.w(g, h, k).inverse();
          rep.check(lhs == rhs, "2-cocycle", {g, h, k, x}, lhs.to_string(), rhs.to_string());
        }
  return rep;
}

namespace detail {

inline bool lex_less(const UnitCochain& a, const UnitCochain& b) {
  std::int64_t L = lcm64(a.root_order(), b.root_order());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t x = a.exponent_at(i) * (L / a.root_order()), y = b.exponent_at(i) * (L / b.root_order());
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace detail

/// Normalized Psi valued in mu_M with d Psi = omega~^-1, one per mu_M-cohomology class.
inline std::vector<UnitCochain> modcat_classes_at(const FusionData& F, const GSet& X, int M, std::size_t bound = 1 << 12) {
  if (!(X.group() == F.group())) fail(ErrorCode::ShapeMismatch, "G-set is over a different group");
  UnitCochain target = inflate(F.omega, X).inverse();
  if (M % target.root_order() != 0) fail(ErrorCode::IndexOutOfRange, "root order must be a multiple of that of omega");
  auto particular = coboundary_preimage_at(target, M);
  if (!particular) return {};
  std::vector<UnitCochain> out;
  for (const auto& z : cohomology_representatives(X, 2, M, bound)) out.push_back(normalize(*particular * z));
  return out;
}

/// One module category per class of Psi with d Psi = omega~^-1, up to cohomology with U(1)
/// coefficients (decided at the lifted root order).  Empty when omega~ is not a coboundary.
inline std::vector<ModuleCategoryData> modcats_for(const FusionData& F, const GSet& X, std::size_t bound = 1 << 12) {
  const int M = F.omega.root_order() * F.group().order();
  std::vector<UnitCochain> candidates = modcat_classes_at(F, X, M, bound);
  // group into U(1)-classes, keep the lexicographically smallest member of each
  std::vector<UnitCochain> reps;
  for (const auto& c : candidates) {
    bool placed = false;
    for (auto& r : reps)
      if (cohomologous(c, r)) {
        if (detail::lex_less(c, r)) r = c;
        placed = true;
        break;
      }
    if (!placed) reps.push_back(c);
  }
  std::sort(reps.begin(), reps.end(), detail::lex_less);
  std::vector<ModuleCategoryData> out;
  for (auto& r : reps) out.push_back(ModuleCategoryData{F, X, r.reduced()});
  return out;
}

inline bool is_indecomposable(const ModuleCategoryData& M) { return is_transitive(M.X); }

struct IndecomposableClass {
  Subgroup H;            // stabilizer of the base point 0
  Subgroup H_canonical;  // smallest conjugate, as a class label
  UnitCochain psi_H;     // Psi restricted to H at the base point, point carrier
  std::vector<int> embedding;
};

inline IndecomposableClass classify_indecomposable(const ModuleCategoryData& M) {
  if (!is_transitive(M.X)) fail(ErrorCode::NotTransitive, "module category is decomposable");
  IndecomposableClass out;
  out.H = stabilizer(M.X, 0);
  out.H_canonical = canonical_conjugate(M.group(), out.H);
  out.psi_H = restrict_at_point(M.psi, out.H, 0, &out.embedding);
  return out;
}

/// Restriction to a union of orbits; index_map[i] is the original point of new point i.
inline ModuleCategoryData restrict_to_points(const ModuleCategoryData& M, const std::vector<int>& points,
                                             std::vector<int>* index_map = nullptr) {
  std::vector<int> idx;
  GSet Y = sub_gset(M.X, points, &idx);
  ModuleCategoryData out{M.fusion, Y, compose_carrier(M.psi, Y, idx)};
  if (index_map) *index_map = idx;
  return out;
}

struct ModcatEquivalence {
  std::vector<int> f;  // isomorphism of G-sets X -> Y
  UnitCochain rho;     // Psi_X (Psi_Y o f)^-1 = d rho
};

inline std::optional<ModcatEquivalence> equivalent_modcats(const ModuleCategoryData& A, const ModuleCategoryData& B,
                                                           int bound = 8) {
  if (!(A.group() == B.group()) || A.fusion.omega != B.fusion.omega) return std::nullopt;
  if (A.X.size() != B.X.size()) return std::nullopt;
  for (const auto& f : gset_isomorphisms(A.X, B.X, bound)) {
    UnitCochain pulled = compose_carrier(B.psi, A.X, f);
    auto rho = coboundary_preimage(A.psi * pulled.inverse());
    if (rho) return ModcatEquivalence{f, *rho};
  }
  return std::nullopt;
}

/// Module trace: dims[x] in {+1, -1}.
struct ModuleTrace {
  std::vector<int> dims;
  Scalar dim(int x) const { return Scalar::from_int(dims[x]); }
};

inline int sign_of(const Unit& u) {
  if (u == Unit(1, 0)) return 1;
  if (u == Unit(2, 1)) return -1;
  fail(ErrorCode::NotSpherical, "value " + u.to_string() + " is not a sign");
}

/// Exists iff kappa is trivial on every stabilizer; normalized to +1 at each orbit's minimal point.
inline std::optional<ModuleTrace> trace_for(const GSet& X, const UnitCochain& kappa) {
  const FiniteGroup& G = X.group();
  ModuleTrace t;
  t.dims.assign(X.size(), 0);
  for (const auto& orb : orbits(X)) {
    int x0 = orb.front();
    for (int g : stabilizer(X, x0))
      if (kappa.value({g}) != Unit(1, 0)) return std::nullopt;
    for (int g = 0; g < G.order(); ++g) t.dims[X.act(g, x0)] = sign_of(kappa.value({g}));
  }
  return t;
}

inline std::optional<ModuleTrace> module_trace(const ModuleCategoryData& M) {
  if (!M.fusion.is_spherical()) fail(ErrorCode::NotSpherical, "module traces need a spherical structure");
  return trace_for(M.X, M.fusion.kappa);
}

/// Omega(g, h, x) of a bimodule category, stored as a plain table.
class MidTable {
 public:
  MidTable() = default;
  MidTable(int G, int H, int X, int N) : G_(G), H_(H), X_(X), N_(N), e_(static_cast<std::size_t>(G) * H * X, 0) {}
  MidTable(int G, int H, int X, int N, std::vector<std::int64_t> e) : MidTable(G, H, X, N) {
    if (e.size() != e_.size()) fail(ErrorCode::ShapeMismatch, "middle constraint table has wrong length");
    for (std::size_t i = 0; i < e.size(); ++i) e_[i] = mod(e[i], N);
  }
  int root_order() const { return N_; }
  std::size_t index(int g, int h, int x) const { return (static_cast<std::size_t>(g) * H_ + h) * X_ + x; }
  Unit value(int g, int h, int x) const { return Unit(N_, e_[index(g, h, x)]); }
  std::int64_t exponent(int g, int h, int x) const { return e_[index(g, h, x)]; }
  void set_exponent(int g, int h, int x, std::int64_t v) { e_[index(g, h, x)] = mod(v, N_); }
  const std::vector<std::int64_t>& exponents() const { return e_; }
  int group_order() const { return G_; }
  int right_order() const { return H_; }
  int carrier_size() const { return X_; }
  friend bool operator==(const MidTable& a, const MidTable& b) {
    if (a.G_ != b.G_ || a.H_ != b.H_ || a.X_ != b.X_) return false;
    std::int64_t L = lcm64(a.N_, b.N_);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (mod(a.e_[i] * (L / a.N_) - b.e_[i] * (L / b.N_), L) != 0) return false;
    return true;
  }

 private:
  int G_ = 1, H_ = 1, X_ = 1, N_ = 1;
  std::vector<std::int64_t> e_{0};
};

/// (G, H)-bimodule category B(X, Psi, Phi, Omega); X is a G x H-set with h |> x = x <| h^-1.
struct BimoduleCategoryData {
  FusionData left, right;
  GSet X;           // over direct_product(G, H)
  UnitCochain psi;  // on G, carrier X restricted to G
  UnitCochain phi;  // on H, carrier X restricted to H
  MidTable omega;

  const FiniteGroup& G() const { return left.group(); }
  const FiniteGroup& H() const { return right.group(); }
  int gx(int g, int x) const { return X.act(pair_index(H(), g, H().identity()), x); }
  int hx(int h, int x) const { return X.act(pair_index(H(), G().identity(), h), x); }
};

inline GSet restrict_to_left(const GSet& X, const FiniteGroup& G, const FiniteGroup& H) {
  std::vector<int> phi(G.order());
  for (int g = 0; g < G.order(); ++g) phi[g] = pair_index(H, g, H.identity());
  return pullback(X, G, phi);
}

inline GSet restrict_to_right(const GSet& X, const FiniteGroup& G, const FiniteGroup& H) {
  std::vector<int> phi(H.order());
  for (int h = 0; h < H.order(); ++h) phi[h] = pair_index(H, G.identity(), h);
  return pullback(X, H, phi);
}

/// kappa((g, h)) = kappa_G(g) kappa_H^-1(h)
inline UnitCochain deligne_kappa(const UnitCochain& kG, const UnitCochain& kH) {
  const FiniteGroup& G = kG.group();
  const FiniteGroup& H = kH.group();
  int L = static_cast<int>(lcm64(kG.root_order(), kH.root_order()));
  UnitCochain out(1, point_gset(direct_product(G, H)), L);
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      out.set_exponent({pair_index(H, g, h)}, 0,
                       kG.exponent({g}) * (L / kG.root_order()) - kH.exponent({h}) * (L / kH.root_order()));
  return out;
}

inline FusionData deligne_fusion(const FusionData& left, const FusionData& right) {
  return FusionData{deligne_omega(left.omega, right.omega), deligne_kappa(left.kappa, right.kappa)};
}

inline Report validate_bimodcat(const BimoduleCategoryData& B) {
  const FiniteGroup& G = B.G();
  const FiniteGroup& H = B.H();
  if (!(B.X.group() == direct_product(G, H))) fail(ErrorCode::ShapeMismatch, "carrier must be a G x H-set");
  GSet XG = restrict_to_left(B.X, G, H), XH = restrict_to_right(B.X, G, H);
  if (!(B.psi.carrier() == XG) || B.psi.degree() != 2) fail(ErrorCode::ShapeMismatch, "psi must be a 2-cochain on X|G");
  if (!(B.phi.carrier() == XH) || B.phi.degree() != 2) fail(ErrorCode::ShapeMismatch, "phi must be a 2-cochain on X|H");
  if (B.omega.group_order() != G.order() || B.omega.right_order() != H.order() || B.omega.carrier_size() != B.X.size())
    fail(ErrorCode::ShapeMismatch, "middle constraint has the wrong shape");

  Report rep;
  Report left = validate_modcat(ModuleCategoryData{B.left, XG, B.psi});
  for (auto& v : left.violations) v.condition = "psi " + v.condition;
  rep.merge(left);
  // right constraint: d Phi = omega_bar_H^-1
  FusionData rbar{omega_bar(B.right.omega), B.right.kappa};
  Report right = validate_modcat(ModuleCategoryData{rbar, XH, B.phi});
  for (auto& v : right.violations) v.condition = "phi " + v.condition;
  rep.merge(right);

  const int nx = B.X.size();
  for (int g1 = 0; g1 < G.order(); ++g1)
    for (int g2 = 0; g2 < G.order(); ++g2)
      for (int h = 0; h < H.order(); ++h)
        for (int x = 0; x < nx; ++x) {
          Unit lhs = B.omega.value(g2, h, B.gx(G.inv(g1), x)) * B.omega.value(G.mul(g1, g2), h, x).inverse() *
                     B.omega.value(g1, h, x);
          Unit rhs = B.psi.value({g1, g2}, x) * B.psi.value({g1, g2}, B.hx(H.inv(h), x)).inverse();
          rep.check(lhs == rhs, "omega condition (g1, g2, h, x)", {g1, g2, h, x}, lhs.to_string(), rhs.to_string());
        }
  for (int g = 0; g < G.order(); ++g)
    for (int h1 = 0; h1 < H.order(); ++h1)
      for (int h2 = 0; h2 < H.order(); ++h2)
        for (int x = 0; x < nx; ++x) {
          Unit lhs = B.omega.value(g, h2, B.hx(H.inv(h1), x)) * B.omega.value(g, H.mul(h1, h2), x).inverse() *
                     B.omega.value(g, h1, x);
          Unit rhs = B.phi.value({h1, h2}, x).inverse() * B.phi.value({h1, h2}, B.gx(G.inv(g), x));
          rep.check(lhs == rhs, "omega condition (g, h1, h2, x)", {g, h1, h2, x}, lhs.to_string(), rhs.to_string());
        }
  return rep;
}

/// The associated module category over Vec_{G x H} with the Deligne-product cocycle.
inline ModuleCategoryData bimod_to_deligne(const BimoduleCategoryData& B) {
  const FiniteGroup& G = B.G();
  const FiniteGroup& H = B.H();
  FusionData F = deligne_fusion(B.left, B.right);
  int L = static_cast<int>(lcm64(lcm64(B.psi.root_order(), B.phi.root_order()), B.omega.root_order()));
  UnitCochain gamma(2, B.X, L);
  const int sp = L / B.psi.root_order(), sf = L / B.phi.root_order(), so = L / B.omega.root_order();
  int t[2];
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    int x = gamma.decode(i, t);
    int g1 = pair_first(H, t[0]), h1 = pair_second(H, t[0]);
    int g2 = pair_first(H, t[1]), h2 = pair_second(H, t[1]);
    int y = B.hx(H.mul(H.inv(h2), H.inv(h1)), x);
    std::int64_t e = B.psi.exponent({g1, g2}, y) * sp + B.phi.exponent({h1, h2}, x) * sf +
                     B.omega.exponent(g1, h2, B.hx(H.inv(h1), x)) * so;
    gamma.set_exponent_at(i, e);
  }
  return ModuleCategoryData{F, B.X, gamma.reduced()};
}

/// Multiplies Gamma by d mu, mu((g, h), x) = Gamma((1, h), (g, 1), x), so that Gamma((1, h), (g, 1), x) = 1.
inline UnitCochain gamma_normalize(const UnitCochain& gamma, const FiniteGroup& G, const FiniteGroup& H) {
  UnitCochain mu(1, gamma.carrier(), gamma.root_order());
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      for (int x = 0; x < gamma.carrier().size(); ++x)
        mu.set_exponent({pair_index(H, g, h)}, x,
                        gamma.exponent({pair_index(H, G.identity(), h), pair_index(H, g, H.identity())}, x));
  return gamma * differential(mu);
}

inline BimoduleCategoryData deligne_to_bimod(const ModuleCategoryData& M, const FusionData& left, const FusionData& right) {
  const FiniteGroup& G = left.group();
  const FiniteGroup& H = right.group();
  if (!(M.group() == direct_product(G, H))) fail(ErrorCode::ShapeMismatch, "module category is not over G x H");
  if (M.fusion.omega != deligne_omega(left.omega, right.omega))
    fail(ErrorCode::ShapeMismatch, "associator is not the Deligne-product cocycle");
  UnitCochain gamma = gamma_normalize(M.psi, G, H);
  const int N = gamma.root_order();
  GSet XG = restrict_to_left(M.X, G, H), XH = restrict_to_right(M.X, G, H);
  UnitCochain psi(2, XG, N), phi(2, XH, N);
  MidTable om(G.order(), H.order(), M.X.size(), N);
  const int eG = G.identity(), eH = H.identity();
  for (int x = 0; x < M.X.size(); ++x) {
    for (int g1 = 0; g1 < G.order(); ++g1)
      for (int g2 = 0; g2 < G.order(); ++g2)
        psi.set_exponent({g1, g2}, x, gamma.exponent({pair_index(H, g1, eH), pair_index(H, g2, eH)}, x));
    for (int h1 = 0; h1 < H.order(); ++h1)
      for (int h2 = 0; h2 < H.order(); ++h2)
        phi.set_exponent({h1, h2}, x, gamma.exponent({pair_index(H, eG, h1), pair_index(H, eG, h2)}, x));
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < H.order(); ++h)
        om.set_exponent(g, h, x, gamma.exponent({pair_index(H, g, eH), pair_index(H, eG, h)}, x));
  }
  return BimoduleCategoryData{left, right, M.X, psi, phi, om};
}

inline std::optional<ModuleTrace> bimodule_trace(const BimoduleCategoryData& B) {
  return module_trace(bimod_to_deligne(B));
}

}  // namespace vecgo
