#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/hom_oracle.hpp"
#include "support/random_data.hpp"
#include "vecgo/modfun.hpp"

using namespace vecgo;
using namespace vecgo::testing;

namespace {

ModuleFunctorData translation_z2() {
  ModuleCategoryData R = trivial_modcat(regular_gset(cyclic_group(2)));
  return functor_from_equivariant(R, R, {1, 0}, UnitCochain(1, R.X, 1));
}

}  // namespace

TEST(ModuleFunctor, IdentityIsValid) {
  std::mt19937 rng(1);
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < n; ++s) {
      FusionData F = make_fusion(omega_cyclic(n, s));
      GSet X = random_gset(F.group(), rng, 4);
      auto M = random_modcat(F, X, rng);
      if (!M) continue;
      ModuleFunctorData I = identity_functor(*M);
      EXPECT_TRUE(validate_modfun(I).ok());
      EXPECT_TRUE(validate_nat_trans(identity_nat_trans(I)).ok());
    }
}

TEST(ModuleFunctor, PerturbedEntryIsReported) {
  ModuleFunctorData F = translation_z2();
  ASSERT_TRUE(validate_modfun(F).ok());
  F.a(1, 0, 1) = Matrix::scalar(Scalar::from_int(2));
  Report r = validate_modfun(F);
  ASSERT_FALSE(r.ok());
  bool named = false;
  for (const auto& v : r.violations) named |= v.condition == "cond_A" && v.tuple[2] == 0 && v.tuple[3] == 1;
  EXPECT_TRUE(named);
  ModuleFunctorData bad = identity_functor(trivial_modcat(point_gset(cyclic_group(2))));
  bad.a(0, 0, 0) = Matrix(2, 2);
  EXPECT_THROW(validate_modfun(bad), Error);
}

TEST(ModuleFunctor, IdentityMatrixAtUnit) {
  std::mt19937 rng(4);
  for (int n = 2; n <= 3; ++n)
    for (const auto& [S, T] : cyclic_pairs(n, rng)) {
      ModuleFunctorData F = random_cyclic_functor(S, T, rng);
      ASSERT_TRUE(validate_modfun(F).ok());
      for (int x = 0; x < F.nx(); ++x)
        for (int y = 0; y < F.ny(); ++y)
          if (F.m(x, y)) EXPECT_TRUE(F.a(0, x, y).is_identity());
    }
}

TEST(Equivariant, Examples) {
  ModuleCategoryData R = trivial_modcat(regular_gset(cyclic_group(2)));
  ModuleFunctorData I = functor_from_equivariant(R, R, {0, 1}, UnitCochain(1, R.X, 1));
  EXPECT_TRUE(same_functor(I, identity_functor(R)));
  ModuleFunctorData T = translation_z2();
  EXPECT_TRUE(validate_modfun(T).ok());
  EXPECT_EQ(T.mult, (std::vector<int>{0, 1, 1, 0}));

  try {
    functor_from_equivariant(R, R, {0, 0}, UnitCochain(1, R.X, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEquivariant);
  }
  UnitCochain lam(1, R.X, 2);
  lam.set_exponent({1}, 0, 1);
  try {
    functor_from_equivariant(R, R, {0, 1}, lam);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LambdaConditionFailed);
  }
}

TEST(Equivariant, CoboundaryChangeGivesIsomorphicFunctor) {
  std::mt19937 rng(9);
  for (int n = 2; n <= 4; ++n)
    for (int s = 0; s < n; ++s) {
      FusionData F = make_fusion(omega_cyclic(n, s));
      GSet X = random_gset(F.group(), rng, 3);
      auto S = random_modcat(F, X, rng);
      auto T = random_modcat(F, X, rng);
      if (!S || !T) continue;
      auto lam = solve_lambda(*S, *T, identity_permutation(X.size()));
      if (!lam) continue;
      ModuleFunctorData A = functor_from_equivariant(*S, *T, identity_permutation(X.size()), *lam);
      UnitCochain moved = *lam * differential(random_cochain(0, X, 6, rng));
      ModuleFunctorData B = functor_from_equivariant(*S, *T, identity_permutation(X.size()), moved);
      EXPECT_TRUE(validate_modfun(A).ok());
      EXPECT_TRUE(validate_modfun(B).ok());
      EXPECT_EQ(hom_dimension(A, B), static_cast<int>(orbits(X).size()));
      EXPECT_TRUE(find_invertible_nat_trans(A, B).has_value());
    }
}

TEST(Hom, Examples) {
  ModuleCategoryData R = trivial_modcat(regular_gset(cyclic_group(2)));
  ModuleFunctorData I = identity_functor(R), T = translation_z2();
  EXPECT_EQ(hom_dimension(I, I), 1);
  EXPECT_EQ(hom_dimension(I, T), 0);
  ModuleFunctorData S = direct_sum({I, T});
  EXPECT_EQ(hom_dimension(S, S), 2);
  EXPECT_EQ(hom_dimension(direct_sum({I, I}), direct_sum({I, I})), 4);
  for (const auto& eta : nat_trans_basis(S, S)) EXPECT_TRUE(validate_nat_trans(eta).ok());
}

TEST(Hom, AgreesWithPerOrbitComputation) {
  std::mt19937 rng(21);
  for (int n = 2; n <= 3; ++n)
    for (const auto& [S, T] : cyclic_pairs(n, rng)) {
      ModuleFunctorData F = random_cyclic_functor(S, T, rng), H = random_cyclic_functor(S, T, rng);
      int total = 0;
      for (const auto& p : orbit_decompose(F))
        for (const auto& q : orbit_decompose(H))
          if (p.orbit == q.orbit) total += hom_dimension(p.functor, q.functor);
      EXPECT_EQ(hom_dimension(F, H), total);
    }
}

TEST(DirectSum, Properties) {
  ModuleFunctorData T = translation_z2();
  EXPECT_TRUE(same_functor(direct_sum({T}), T));
  ModuleCategoryData R = trivial_modcat(regular_gset(cyclic_group(2)));
  ModuleFunctorData S = direct_sum({T, identity_functor(R), T});
  EXPECT_TRUE(validate_modfun(S).ok());
  EXPECT_EQ(S.m(0, 1), 2);
  EXPECT_EQ(S.m(0, 0), 1);
  Matrix expect = block_diagonal({T.a(1, 0, 1), T.a(1, 0, 1)});
  EXPECT_EQ(S.a(1, 0, 1), expect);
  ModuleCategoryData P = trivial_modcat(point_gset(cyclic_group(2)));
  try {
    direct_sum({T, identity_functor(P)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SourceTargetMismatch);
  }
}

TEST(OrbitDecompose, Examples) {
  ModuleCategoryData R = trivial_modcat(regular_gset(cyclic_group(2)));
  auto id = orbit_decompose(identity_functor(R));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].orbit, (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
  auto tr = orbit_decompose(translation_z2());
  ASSERT_EQ(tr.size(), 1u);
  EXPECT_EQ(tr[0].orbit, (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
}

TEST(OrbitDecompose, SumOfPartsRestoresFunctor) {
  std::mt19937 rng(33);
  for (int n = 2; n <= 3; ++n)
    for (const auto& [S, T] : cyclic_pairs(n, rng)) {
      ModuleFunctorData F = random_cyclic_functor(S, T, rng);
      auto parts = orbit_decompose(F);
      std::vector<ModuleFunctorData> fs;
      int dims = 0;
      for (const auto& p : parts) {
        EXPECT_TRUE(validate_modfun(p.functor).ok());
        fs.push_back(p.functor);
        dims += hom_dimension(p.functor, p.functor);
      }
      EXPECT_TRUE(same_functor(direct_sum(fs), F));
      EXPECT_EQ(hom_dimension(F, F), dims);
    }
}

TEST(Adjoint, Examples) {
  ModuleCategoryData R = trivial_modcat(regular_gset(cyclic_group(2)));
  EXPECT_TRUE(same_functor(adjoint(identity_functor(R)), identity_functor(R)));
  std::mt19937 rng(2);
  FusionData F = make_fusion(omega_cyclic(3, 1));
  GSet X = regular_gset(F.group());
  auto S = random_modcat(F, X, rng), T = random_modcat(F, X, rng);
  std::vector<int> f{1, 2, 0};
  auto lam = solve_lambda(*S, *T, f);
  ASSERT_TRUE(lam.has_value());
  ModuleFunctorData G = functor_from_equivariant(*S, *T, f, *lam);
  ModuleFunctorData Gr = adjoint(G);
  EXPECT_TRUE(validate_modfun(Gr).ok());
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) EXPECT_EQ(Gr.m(y, x), f[x] == y ? 1 : 0);
}

TEST(Adjoint, DoubleAdjointIsIsomorphic) {
  std::mt19937 rng(77);
  int checked = 0;
  for (int round = 0; round < 2; ++round)
    for (int n = 2; n <= 3; ++n)
      for (const auto& [S, T] : cyclic_pairs(n, rng)) {
        ModuleFunctorData F = random_cyclic_functor(S, T, rng);
        ModuleFunctorData R = adjoint(F);
        ASSERT_TRUE(validate_modfun(R).ok());
        ModuleFunctorData RR = adjoint(R);
        ASSERT_TRUE(validate_modfun(RR).ok());
        auto eta = find_invertible_nat_trans(RR, F);
        ASSERT_TRUE(eta.has_value());
        EXPECT_TRUE(validate_nat_trans(*eta).ok());
        ++checked;
      }
  EXPECT_GE(checked, 20);
}

TEST(SimpleCyclic, Counts) {
  for (int n = 1; n <= 5; ++n) {
    ModuleCategoryData P = trivial_modcat(point_gset(cyclic_group(n)));
    ModuleCategoryData R = trivial_modcat(regular_gset(cyclic_group(n)));
    EXPECT_EQ(count_simple_cyclic(P, P), static_cast<std::size_t>(n));
    EXPECT_EQ(count_simple_cyclic(R, R), static_cast<std::size_t>(n));
    EXPECT_EQ(classify_simple_cyclic(R, R).size(), static_cast<std::size_t>(n));
  }
  FiniteGroup Z2 = cyclic_group(2);
  ModuleCategoryData B = trivial_modcat(disjoint_union(point_gset(Z2), regular_gset(Z2)));
  EXPECT_EQ(count_simple_cyclic(B, B), 6u);
  EXPECT_EQ(classify_simple_cyclic(B, B).size(), 6u);
  ModuleCategoryData V = trivial_modcat(point_gset(small_groups()[8]));
  ASSERT_EQ(V.group().order(), 4);
  ASSERT_LT(cyclic_generator(V.group()), 0);
  try {
    classify_simple_cyclic(V, V);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCyclic);
  }
}

TEST(SimpleCyclic, PointLabels) {
  ModuleCategoryData P2 = trivial_modcat(point_gset(cyclic_group(2)));
  auto two = classify_simple_cyclic(P2, P2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].xi.to_scalar(), Scalar::one());
  EXPECT_EQ(two[1].xi.to_scalar(), Scalar::from_int(-1));
  ModuleCategoryData P3 = trivial_modcat(point_gset(cyclic_group(3)));
  auto three = classify_simple_cyclic(P3, P3);
  ASSERT_EQ(three.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(three[k].xi, Unit(3, k));
}

TEST(SimpleCyclic, OutputsAreSimpleAndPairwiseDistinct) {
  std::mt19937 rng(5);
  for (int n = 2; n <= 3; ++n)
    for (const auto& [S, T] : cyclic_pairs(n, rng)) {
      auto out = classify_simple_cyclic(S, T);
      EXPECT_EQ(out.size(), count_simple_cyclic(S, T));
      std::size_t expect = 0;
      for (const auto& orb : pair_orbits(S.X, T.X)) expect += n / orb.size();
      EXPECT_EQ(out.size(), expect);
      for (std::size_t i = 0; i < out.size(); ++i) {
        EXPECT_TRUE(validate_modfun(out[i].functor).ok());
        for (std::size_t j = 0; j < out.size(); ++j)
          EXPECT_EQ(hom_dimension(out[i].functor, out[j].functor), i == j ? 1 : 0) << i << " " << j;
      }
    }
}

TEST(Bimodfun, IdentityMapsToIdentity) {
  FiniteGroup Z2 = cyclic_group(2);
  FusionData one = make_fusion(omega_cyclic(2, 0));
  GSet X = regular_gset(direct_product(Z2, Z2));
  ModuleCategoryData D = modcats_for(deligne_fusion(one, one), X).at(0);
  ModuleFunctorData K = identity_functor(D);
  BimoduleFunctorData F = deligne_to_bimodfun(K, one, one);
  EXPECT_TRUE(validate_bimodfun(F).ok());
  for (const auto& a : F.A)
    if (!a.empty()) EXPECT_TRUE(a.is_identity());
  for (const auto& b : F.B)
    if (!b.empty()) EXPECT_TRUE(b.is_identity());
  EXPECT_TRUE(same_functor(bimodfun_to_deligne(F), K));
}

TEST(Bimodfun, RandomRoundTrips) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    BimoduleFunctorData F = random_bimodfun(rng);
    Report r = validate_bimodfun(F);
    ASSERT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations[0].condition);
    ModuleFunctorData K = bimodfun_to_deligne(F);
    ASSERT_TRUE(validate_modfun(K).ok());
    BimoduleFunctorData F2 = deligne_to_bimodfun(K, F.source.left, F.source.right);
    EXPECT_EQ(F2.mult, F.mult);
    EXPECT_EQ(F2.A, F.A);
    EXPECT_EQ(F2.B, F.B);
    EXPECT_TRUE(same_functor(bimodfun_to_deligne(F2), K));
  }
}

TEST(Bimodfun, CorruptedBIsRejected) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    BimoduleFunctorData F = random_bimodfun(rng);
    // scale one B block for the nontrivial element of H
    std::size_t start = static_cast<std::size_t>(F.nx()) * F.ny();
    for (std::size_t i = start; i < F.B.size(); ++i)
      if (!F.B[i].empty()) {
        F.B[i] = Scalar::from_int(3) * F.B[i];
        break;
      }
    EXPECT_FALSE(validate_bimodfun(F).ok());
  }
}

TEST(Bimodfun, NaturalTransformationsPassThrough) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    BimoduleFunctorData F = random_bimodfun(rng);
    ModuleFunctorData K = bimodfun_to_deligne(F);
    ModuleFunctorData K2 = random_gauge(K, rng);
    auto eta = find_invertible_nat_trans(K, K2);
    ASSERT_TRUE(eta.has_value());
    // the same M tables intertwine the A and B parts of the bimodule functors
    BimoduleFunctorData F2 = deligne_to_bimodfun(K2, F.source.left, F.source.right);
    ModuleFunctorData AF{left_part(F.source), left_part(F.target), F.mult, F.A};
    ModuleFunctorData AF2{left_part(F2.source), left_part(F2.target), F2.mult, F2.A};
    EXPECT_TRUE(validate_nat_trans(NatTransData{AF, AF2, eta->M}).ok());
  }
}

TEST(SimpleCyclic, HomAgreesWithOrbitPropagation) {
  std::mt19937 rng(8);
  for (int n = 2; n <= 3; ++n)
    for (const auto& [S, T] : cyclic_pairs(n, rng)) {
      auto out = classify_simple_cyclic(S, T);
      for (const auto& a : out)
        for (const auto& b : out) {
          EXPECT_EQ(brute_hom_dimension_simple(a.functor, b.functor), hom_dimension(a.functor, b.functor));
          ModuleFunctorData g = random_gauge(b.functor, rng);
          EXPECT_EQ(brute_hom_dimension_simple(a.functor, g), hom_dimension(a.functor, g));
        }
    }
}
