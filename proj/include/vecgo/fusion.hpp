// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "vecgo/cochain.hpp"

namespace vecgo {

/// Vec_G^omega with the pivotal structure given by a character kappa.
struct FusionData {
  UnitCochain omega;  // normalized 3-cocycle, point carrier
  UnitCochain kappa;  // character, degree 1, point carrier

  const FiniteGroup& group() const { return omega.group(); }

  bool is_spherical() const {
    for (int g = 0; g < group().order(); ++g) {
      Unit k = kappa.value({g});
      if (k != Unit(1, 0) && k != Unit(2, 1)) return false;
    }
    return true;
  }

  Unit w(int g, int h, int k) const { return omega.value({g, h, k}); }
  Unit kap(int g) const { return kappa.value({g}); }

  /// beta(g) = kappa(g) omega^-1(g, g^-1, g)
  Unit beta(int g) const { return kap(g) * w(g, group().inv(g), g).inverse(); }
};

inline void check_omega(const UnitCochain& omega) {
  if (omega.degree() != 3 || omega.carrier().size() != 1) fail(ErrorCode::DegreeMismatch, "omega must be a 3-cochain with point carrier");
  if (!omega.is_normalized()) fail(ErrorCode::NotNormalized, "omega is not normalized");
  UnitCochain d = differential(omega);
  if (!d.is_trivial()) {
    std::vector<int> a(4);
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d.exponent_at(i) != 0) {
        d.decode(i, a.data());
        fail(ErrorCode::NotCocycle, "omega fails the cocycle condition at (" + std::to_string(a[0]) + "," +
                                        std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
                                        std::to_string(a[3]) + ")");
      }
  }
}

inline FusionData make_fusion(UnitCochain omega, UnitCochain kappa) {
  check_omega(omega);
  if (!(kappa.group() == omega.group()) || !is_character(kappa))
    fail(ErrorCode::NotHomomorphism, "kappa is not a character of G");
  return FusionData{std::move(omega), std::move(kappa)};
}

inline FusionData make_fusion(UnitCochain omega) {
  FiniteGroup G = omega.group();
  return make_fusion(std::move(omega), UnitCochain(1, point_gset(G), 1));
}

/// Characters are taken with values in mu_L, L = lcm(N, exponent of G), so that every character occurs.
inline std::vector<FusionData> pivotal_structures(const UnitCochain& omega, int bound = 24) {
  check_omega(omega);
  const FiniteGroup& G = omega.group();
  int L = static_cast<int>(lcm64(omega.root_order(), G.exponent()));
  std::vector<FusionData> out;
  for (auto& k : characters(G, L, bound)) out.push_back(FusionData{omega, k.reduced()});
  return out;
}

inline std::vector<FusionData> spherical_structures(const UnitCochain& omega, int bound = 24) {
  std::vector<FusionData> out;
  for (auto& F : pivotal_structures(omega, bound))
    if (F.is_spherical()) out.push_back(std::move(F));
  return out;
}

struct EvalCoev {
  Unit evR, coevR, evL, coevL;
};

inline EvalCoev eval_coev(const FusionData& F, int g) {
  int gi = F.group().inv(g);
  return EvalCoev{F.w(gi, g, gi), Unit(1, 0), F.kap(g), F.kap(g).inverse() * F.w(g, gi, g)};
}

inline Scalar dim(const FusionData& F, int g) {
  if (!F.is_spherical()) fail(ErrorCode::NotSpherical, "dimensions need a spherical structure");
  return F.kap(g).to_scalar();
}

enum class Sign { Plus, Minus };

/// Fusion 6j symbol; labels must satisfy c = ij, a = jk, b = ck.
inline Unit fusion_6j_unit(const FusionData& F, Sign sign, int i, int j, int k, int a, int b, int c) {
  if (!F.is_spherical()) fail(ErrorCode::NotSpherical, "6j symbols need a spherical structure");
  const FiniteGroup& G = F.group();
  for (int l : {i, j, k, a, b, c})
    if (l < 0 || l >= G.order()) fail(ErrorCode::IndexOutOfRange, "label out of range");
  if (c != G.mul(i, j) || a != G.mul(j, k) || b != G.mul(c, k))
    fail(ErrorCode::UndefinedLabels, "labels do not compose");
  if (sign == Sign::Plus) return F.kap(a) * F.w(i, j, k);
  return F.kap(c) * F.w(i, j, k).inverse();
}

inline Scalar fusion_6j(const FusionData& F, Sign sign, int i, int j, int k, int a, int b, int c) {
  return fusion_6j_unit(F, sign, i, j, k, a, b, c).to_scalar();
}

}  // namespace vecgo
