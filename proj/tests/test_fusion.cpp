#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "vecgo/fusion.hpp"

using namespace vecgo;
using namespace vecgo::testing;

TEST(Pivotal, SphericalCounts) {
  for (int s = 0; s < 2; ++s) EXPECT_EQ(spherical_structures(omega_cyclic(2, s)).size(), 2u);
  for (int s = 0; s < 3; ++s) EXPECT_EQ(spherical_structures(omega_cyclic(3, s)).size(), 1u);
  EXPECT_EQ(pivotal_structures(omega_cyclic(1, 0)).size(), 1u);
  EXPECT_EQ(pivotal_structures(omega_cyclic(3, 1)).size(), 3u);
  EXPECT_EQ(pivotal_structures(omega_cyclic(4, 1)).size(), 4u);
  EXPECT_EQ(spherical_structures(omega_cyclic(4, 1)).size(), 2u);
}

TEST(Pivotal, SphericalIffNormalSubgroupsOfIndexTwoPlusOne) {
  // each nontrivial sign character has an index-2 kernel
  for (const auto& G : small_groups()) {
    std::size_t index_two = 0;
    for (const auto& H : subgroups(G))
      if (2 * static_cast<int>(H.size()) == G.order()) ++index_two;  // index 2 subgroups are normal
    UnitCochain trivial(3, point_gset(G), 1);
    EXPECT_EQ(spherical_structures(trivial).size(), index_two + 1);
  }
}

TEST(Pivotal, RejectsBadOmega) {
  FiniteGroup Z2 = cyclic_group(2);
  UnitCochain bad(3, point_gset(Z2), 2);
  bad.set_exponent({0, 1, 1}, 0, 1);
  try {
    pivotal_structures(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
  UnitCochain w = omega_cyclic(3, 1);
  w.set_exponent({1, 1, 2}, 0, 2);
  try {
    pivotal_structures(w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCocycle);
  }
  EXPECT_THROW(make_fusion(omega_cyclic(3, 0), UnitCochain(1, point_gset(cyclic_group(3)), 3, {0, 1, 1})), Error);
}

TEST(Pivotal, BetaIsMonoidal) {
  for (int n = 1; n <= 6; ++n)
    for (int s = 0; s < n; ++s)
      for (const auto& F : pivotal_structures(omega_cyclic(n, s))) {
        const FiniteGroup& G = F.group();
        for (int g = 0; g < n; ++g)
          for (int h = 0; h < n; ++h) {
            int gh = G.mul(g, h);
            Unit lhs = F.beta(g) * F.beta(h) * F.w(g, G.inv(g), g) * F.w(h, G.inv(h), h);
            Unit rhs = F.beta(gh) * F.w(gh, G.inv(gh), gh);
            EXPECT_EQ(lhs, rhs);
          }
      }
}

TEST(EvalCoev, Values) {
  FusionData triv = make_fusion(omega_cyclic(3, 0));
  for (int g = 0; g < 3; ++g) {
    EvalCoev e = eval_coev(triv, g);
    EXPECT_EQ(e.evR, Unit(1, 0));
    EXPECT_EQ(e.coevR, Unit(1, 0));
    EXPECT_EQ(e.evL, Unit(1, 0));
    EXPECT_EQ(e.coevL, Unit(1, 0));
  }
  FusionData F = make_fusion(omega_cyclic(2, 1));
  EXPECT_EQ(eval_coev(F, 1).evR.to_scalar(), Scalar::from_int(-1));
  for (int n = 2; n <= 5; ++n)
    for (const auto& P : pivotal_structures(omega_cyclic(n, 1)))
      for (int g = 0; g < n; ++g) {
        EvalCoev e = eval_coev(P, g);
        EXPECT_EQ(e.evR * e.coevR, P.w(P.group().inv(g), g, P.group().inv(g)));
        EXPECT_EQ(e.evL * e.coevL, P.w(g, P.group().inv(g), g));
      }
}

TEST(Dimensions, CharacterValues) {
  auto sph = spherical_structures(omega_cyclic(2, 0));
  ASSERT_EQ(sph.size(), 2u);
  EXPECT_EQ(dim(sph[0], 1), Scalar::one());
  EXPECT_EQ(dim(sph[1], 1), Scalar::from_int(-1));
  for (const auto& F : spherical_structures(omega_cyclic(4, 2)))
    for (int g = 0; g < 4; ++g) {
      EXPECT_EQ(dim(F, g) * dim(F, F.group().inv(g)), Scalar::one());
      for (int h = 0; h < 4; ++h) EXPECT_EQ(dim(F, F.group().mul(g, h)), dim(F, g) * dim(F, h));
    }
  auto piv = pivotal_structures(omega_cyclic(3, 0));
  bool refused = false;
  for (const auto& P : piv)
    if (!P.is_spherical()) {
      EXPECT_THROW(dim(P, 1), Error);
      refused = true;
    }
  EXPECT_TRUE(refused);
}

TEST(Fusion6j, WorkedValues) {
  FusionData one = make_fusion(omega_cyclic(1, 0));
  EXPECT_EQ(fusion_6j(one, Sign::Plus, 0, 0, 0, 0, 0, 0), Scalar::one());
  FusionData F = make_fusion(omega_cyclic(2, 1));
  EXPECT_EQ(fusion_6j(F, Sign::Plus, 1, 1, 1, 0, 1, 0), Scalar::from_int(-1));
  auto sph = spherical_structures(omega_cyclic(2, 0));
  EXPECT_EQ(fusion_6j(sph[1], Sign::Plus, 1, 1, 0, 1, 0, 0), Scalar::from_int(-1));
  try {
    fusion_6j(F, Sign::Plus, 1, 1, 1, 1, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndefinedLabels);
  }
}

TEST(Fusion6j, PlusTimesMinusCollapses) {
  for (int n = 2; n <= 4; ++n)
    for (int s = 0; s < n; ++s)
      for (const auto& F : spherical_structures(omega_cyclic(n, s))) {
        const FiniteGroup& G = F.group();
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
              int c = G.mul(i, j), a = G.mul(j, k), b = G.mul(c, k);
              Scalar p = fusion_6j(F, Sign::Plus, i, j, k, a, b, c) * fusion_6j(F, Sign::Minus, i, j, k, a, b, c);
              EXPECT_EQ(p * dim(F, a) * dim(F, c), Scalar::one());
            }
      }
}
