#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "vecgo/scalar.hpp"

using namespace vecgo;

namespace {

// Independent oracle: Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)} over integer polynomials.
int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// exact division by the monic polynomial x^d - 1
std::vector<long long> div_xd_minus_1(std::vector<long long> a, int d) {
  std::vector<long long> q(a.size() - d, 0);
  for (int k = static_cast<int>(a.size()) - 1; k >= d; --k) {
    long long c = a[k];
    q[k - d] = c;
    a[k] -= c;
    a[k - d] += c;
  }
  for (int k = 0; k < d; ++k) EXPECT_EQ(a[k], 0);
  return q;
}

std::vector<long long> phi_oracle(int N) {
  std::vector<long long> p{1};
  std::vector<int> neg;
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    int m = moebius(N / d);
    if (m == 1) {
      std::vector<long long> f(d + 1, 0);
      f[0] = -1;
      f[d] = 1;
      p = poly_mul(p, f);
    } else if (m == -1) {
      neg.push_back(d);
    }
  }
  for (int d : neg) p = div_xd_minus_1(p, d);
  return p;
}

std::complex<double> numeric(const Scalar& s) {
  const double pi = 3.14159265358979323846;
  std::complex<double> z = std::polar(1.0, 2 * pi / s.root_order());
  std::complex<double> acc = 0, zk = 1;
  for (const auto& c : s.coeffs()) {
    acc += c.get_d() * zk;
    zk *= z;
  }
  return acc;
}

Scalar random_scalar(std::mt19937& rng, int N) {
  std::uniform_int_distribution<int> coeff(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (int i = 0; i < euler_phi(N); ++i) c.emplace_back(coeff(rng), den(rng));
  for (auto& q : c) q.canonicalize();
  return Scalar(N, c);
}

}  // namespace

TEST(CyclotomicPolynomial, BaseCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<BigInt>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (std::vector<BigInt>{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<BigInt>{1, -1, 1}));
}

TEST(CyclotomicPolynomial, MatchesMoebiusProductOracle) {
  for (int N = 1; N <= 60; ++N) {
    auto got = cyclotomic_polynomial(N);
    auto want = phi_oracle(N);
    ASSERT_EQ(got.size(), want.size()) << N;
    for (size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], BigInt(static_cast<long>(want[i]))) << N;
  }
  // first cyclotomic polynomial with a coefficient of absolute value 2
  auto p105 = cyclotomic_polynomial(105);
  bool has_two = false;
  for (const auto& c : p105) has_two |= (c == -2);
  EXPECT_TRUE(has_two);
}

TEST(Scalar, WorkedValues) {
  EXPECT_EQ(Scalar::zeta(4) * Scalar::zeta(4), Scalar::from_int(-1, 4));
  EXPECT_EQ(Scalar::zeta(3) + Scalar::zeta(3, 2), Scalar::from_int(-1, 3));
  EXPECT_EQ(Scalar::zeta(6, 2), Scalar::zeta(3));
  EXPECT_EQ(Scalar::zeta(6, 2).to_string(), "-1 + z6");
  EXPECT_THROW(Scalar::zero(5).inverse(), Error);
}

TEST(Scalar, RootsOfUnityHaveExactOrder) {
  for (int N = 1; N <= 30; ++N) {
    Scalar z = Scalar::zeta(N);
    EXPECT_TRUE(z.pow(N).is_one());
    for (int k = 1; k < N; ++k) EXPECT_FALSE(z.pow(k).is_one()) << N << " " << k;
  }
}

TEST(Scalar, InverseProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int N = 1 + trial % 24;
    Scalar a = random_scalar(rng, N);
    if (a.is_zero()) continue;
    EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(a / a, Scalar::one(N));
  }
}

TEST(Scalar, ArithmeticAgreesWithComplexEvaluation) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int N = 1 + trial % 20;
    Scalar a = random_scalar(rng, N), b = random_scalar(rng, N);
    EXPECT_LT(std::abs(numeric(a * b) - numeric(a) * numeric(b)), 1e-8);
    EXPECT_LT(std::abs(numeric(a + b) - (numeric(a) + numeric(b))), 1e-8);
    if (!b.is_zero()) EXPECT_LT(std::abs(numeric(a / b) - numeric(a) / numeric(b)), 1e-6);
  }
}

TEST(Scalar, EmbeddingCommutesWithOperations) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    int N = 1 + trial % 12;
    int M = N * (1 + (trial / 12) % 4);
    Scalar a = random_scalar(rng, N), b = random_scalar(rng, N);
    EXPECT_EQ((a * b).embed(M), a.embed(M) * b.embed(M));
    EXPECT_EQ((a + b).embed(M), a.embed(M) + b.embed(M));
    EXPECT_EQ((-a).embed(M), -a.embed(M));
    if (!b.is_zero()) EXPECT_EQ((a / b).embed(M), a.embed(M) / b.embed(M));
    EXPECT_EQ(a, a.embed(M));
  }
}

TEST(Scalar, MixedRootOrdersCombineAtLcm) {
  Scalar i = Scalar::zeta(4), w = Scalar::zeta(3);
  Scalar p = i * w;
  EXPECT_EQ(p.root_order(), 12);
  EXPECT_EQ(p, Scalar::zeta(12, 3 + 4));
}

TEST(Unit, RootsOfUnityExamples) {
  auto r1 = unit_roots(Unit(1, 0), 2);
  ASSERT_EQ(r1.size(), 2u);
  EXPECT_EQ(r1[0].to_scalar(), Scalar::one());
  EXPECT_EQ(r1[1].to_scalar(), Scalar::from_int(-1));

  auto r2 = unit_roots(Unit(2, 1), 2);
  EXPECT_EQ(r2[0], Unit(4, 1));
  EXPECT_EQ(r2[1], Unit(4, 3));

  auto r3 = unit_roots(Unit(3, 1), 3);
  EXPECT_EQ(r3[0], Unit(9, 1));
  EXPECT_EQ(r3[1], Unit(9, 4));
  EXPECT_EQ(r3[2], Unit(9, 7));
}

TEST(Unit, RootsAreDistinctAndExact) {
  for (int N = 1; N <= 8; ++N)
    for (int a = 0; a < N; ++a)
      for (int r = 1; r <= 5; ++r) {
        Unit u(N, a);
        auto roots = unit_roots(u, r);
        ASSERT_EQ(static_cast<int>(roots.size()), r);
        for (int i = 0; i < r; ++i) {
          EXPECT_EQ(roots[i].pow(r), u);
          EXPECT_EQ(roots[i].to_scalar().pow(r), u.to_scalar());
          for (int j = 0; j < i; ++j) EXPECT_NE(roots[i], roots[j]);
        }
      }
}

TEST(Unit, HomomorphismToScalars) {
  for (int N = 1; N <= 12; ++N)
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        EXPECT_EQ((Unit(N, a) * Unit(N, b)).to_scalar(), Unit(N, a).to_scalar() * Unit(N, b).to_scalar());
  EXPECT_EQ(Unit(6, 2), Unit(3, 1));
  EXPECT_EQ(Unit(4, 2).to_string(), "-1");
  EXPECT_EQ(as_unit(Scalar::zeta(5, 2)), Unit(10, 4));
  EXPECT_FALSE(as_unit(Scalar::from_int(2)).has_value());
}
