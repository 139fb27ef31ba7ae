// Random valid instances for property tests.
#pragma once

#include <random>

#include "support/corpus.hpp"
#include "vecgo/modcat.hpp"
#include "vecgo/modfun.hpp"

namespace vecgo::testing {

/// Trivial omega, kappa and Psi on X.
inline ModuleCategoryData trivial_modcat(const GSet& X) {
  return ModuleCategoryData{make_fusion(UnitCochain(3, point_gset(X.group()), 1)), X, UnitCochain(2, X, 1)};
}

inline FusionData random_spherical(int n, std::mt19937& rng) {
  auto sph = spherical_structures(omega_cyclic(n, rng() % n));
  return sph[rng() % sph.size()];
}

/// A valid module category over fusion F on a random carrier, moved off its class
/// representative by a random normalized coboundary.
inline std::optional<ModuleCategoryData> random_modcat(const FusionData& F, const GSet& X, std::mt19937& rng) {
  auto classes = modcats_for(F, X);
  if (classes.empty()) return std::nullopt;
  ModuleCategoryData M = classes[rng() % classes.size()];
  int N = static_cast<int>(lcm64(M.psi.root_order(), 4));
  M.psi = (M.psi * differential(random_normalized_cochain(1, X, N, rng))).reduced();
  return M;
}

/// Random valid (Z/2, Z/2)-bimodule category built through the Deligne correspondence.
inline BimoduleCategoryData random_bimodcat(std::mt19937& rng) {
  FiniteGroup Z2 = cyclic_group(2);
  FiniteGroup GH = direct_product(Z2, Z2);
  for (;;) {
    FusionData left = random_spherical(2, rng), right = random_spherical(2, rng);
    GSet X = random_gset(GH, rng, 4);
    auto M = random_modcat(deligne_fusion(left, right), X, rng);
    if (!M) continue;
    return deligne_to_bimod(*M, left, right);
  }
}

inline Matrix random_invertible(int n, std::mt19937& rng) {
  for (;;) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Scalar::from_int(static_cast<long>(rng() % 5) - 2);
    if (is_invertible(m)) return m;
  }
}

/// Conjugates F by random invertible integer matrices on its support.
inline ModuleFunctorData random_gauge(const ModuleFunctorData& F, std::mt19937& rng) {
  std::vector<Matrix> P(F.mult.size());
  for (std::size_t i = 0; i < P.size(); ++i)
    if (F.mult[i] > 0) P[i] = random_invertible(F.mult[i], rng);
  return conjugate_functor(F, P);
}

inline bool same_functor(const ModuleFunctorData& a, const ModuleFunctorData& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) && a.mult == b.mult && a.A == b.A;
}

/// Random valid functor over a cyclic group: a direct sum of one to three simple functors, gauged.
inline ModuleFunctorData random_cyclic_functor(const ModuleCategoryData& S, const ModuleCategoryData& T, std::mt19937& rng) {
  auto simple = classify_simple_cyclic(S, T);
  std::vector<ModuleFunctorData> parts;
  int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) parts.push_back(simple[rng() % simple.size()].functor);
  return random_gauge(direct_sum(parts), rng);
}

/// Random functor between Deligne module categories with the same carrier: sums of F_{f, Lambda}.
inline std::optional<ModuleFunctorData> random_equivariant_functor(const ModuleCategoryData& S, const ModuleCategoryData& T,
                                                                   std::mt19937& rng) {
  std::vector<ModuleFunctorData> parts;
  auto isos = gset_isomorphisms(S.X, T.X);
  if (isos.empty()) return std::nullopt;
  int k = 1 + static_cast<int>(rng() % 2);
  for (int tries = 0; tries < 8 && static_cast<int>(parts.size()) < k; ++tries) {
    const auto& f = isos[rng() % isos.size()];
    auto lam = solve_lambda(S, T, f);
    if (!lam) continue;
    // move Lambda by a random 0-cochain coboundary
    UnitCochain rho = random_cochain(0, S.X, 4, rng);
    parts.push_back(functor_from_equivariant(S, T, f, (*lam * differential(rho)).reduced()));
  }
  if (parts.empty()) return std::nullopt;
  return random_gauge(direct_sum(parts), rng);
}

/// A random bimodule functor between (Z/2, Z/2)-bimodule categories, built on the Deligne side.
inline BimoduleFunctorData random_bimodfun(std::mt19937& rng) {
  for (;;) {
    BimoduleCategoryData B = random_bimodcat(rng);
    ModuleCategoryData S = bimod_to_deligne(B);
    ModuleCategoryData T = S;
    T.psi = gamma_normalize((S.psi * differential(random_normalized_cochain(1, S.X, 4, rng))).reduced(), B.G(), B.H()).reduced();
    auto K = random_equivariant_functor(S, T, rng);
    if (!K) continue;
    return deligne_to_bimodfun(*K, B.left, B.right);
  }
}

/// Source/target pairs over Z/n on point, regular and point + regular carriers: each
/// class representative with a gauge-moved copy, both orders. With all_spherical the
/// pairs are repeated for every spherical structure, otherwise kappa is trivial.
inline std::vector<std::pair<ModuleCategoryData, ModuleCategoryData>> cyclic_pairs(int n, std::mt19937& rng,
                                                                                   bool all_spherical = false) {
  std::vector<std::pair<ModuleCategoryData, ModuleCategoryData>> out;
  FiniteGroup G = cyclic_group(n);
  GSet pt = point_gset(G), reg = regular_gset(G), both = disjoint_union(pt, reg);
  for (int s = 0; s < n; ++s) {
    std::vector<FusionData> fusions{make_fusion(omega_cyclic(n, s))};
    if (all_spherical) fusions = spherical_structures(omega_cyclic(n, s));
    for (const auto& F : fusions)
      for (const auto& X : {pt, reg, both}) {
        auto cls = modcats_for(F, X);
        if (cls.empty()) continue;
        auto moved = random_modcat(F, X, rng);
        out.push_back({cls[0], *moved});
        out.push_back({*moved, cls[0]});
      }
  }
  return out;
}

}  // namespace vecgo::testing
