#include "sqmult/hilbert.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sqmult/errors.hpp"
#include "sqmult/primes.hpp"

namespace sqmult {
namespace {

MonomialIdeal squarefree(std::size_t n,
                         std::vector<std::vector<std::size_t>> supports) {
  std::vector<Monomial> gens;
  for (const auto& s : supports) gens.push_back(Monomial::squarefree(n, s));
  return minimalize(std::move(gens), n);
}

const MonomialIdeal kTwoEdges = squarefree(3, {{1, 2}, {2, 3}});
const MonomialIdeal kTriangle = squarefree(3, {{1, 2}, {2, 3}, {1, 3}});

KPolynomial power_of(const KPolynomial& p, unsigned k) {
  KPolynomial out = KPolynomial::one();
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

TEST(KPolynomialOfIdealTest, Examples) {
  EXPECT_EQ(k_polynomial(squarefree(1, {{1}})), (KPolynomial{1, -1}));
  EXPECT_EQ(k_polynomial(squarefree(2, {{1, 2}})), (KPolynomial{1, 0, -1}));
  EXPECT_EQ(k_polynomial(kTwoEdges), (KPolynomial{1, 0, -2, 1}));
  EXPECT_EQ(k_polynomial(minimalize({}, 4)), KPolynomial::one());
  EXPECT_TRUE(k_polynomial(MonomialIdeal::unit(2)).is_zero());
}

TEST(KPolynomialOfIdealTest, NodeCapThrows) {
  Limits tight;
  tight.max_nodes = 2;
  EXPECT_THROW(k_polynomial(power(kTriangle, 3), tight), ResourceError);
}

TEST(KPolynomialOfIdealTest, PivotIndependence) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto I = trial % 2 == 0
                       ? oracle::random_squarefree(rng, n, 2 * n)
                       : oracle::random_monomial_ideal(rng, n, 2 * n, 3);
    const auto base = k_polynomial(I);
    EXPECT_EQ(k_polynomial(I, {}, PivotStrategy::kFirstSharedVariable), base)
        << I;
    EXPECT_EQ(k_polynomial(I, {}, PivotStrategy::kPairGcd), base) << I;
  }
}

TEST(SeriesProfileTest, Examples) {
  const auto two = series_profile(kTwoEdges);
  EXPECT_EQ(two.d, 2u);
  EXPECT_EQ(two.e0, 1);
  EXPECT_EQ(two.vanishing_order, 1u);
  EXPECT_EQ(two.deflated, (KPolynomial{1, 1, -1}));

  const auto tri = series_profile(kTriangle);
  EXPECT_EQ(tri.d, 1u);
  EXPECT_EQ(tri.e0, 3);

  const auto maximal = series_profile(squarefree(3, {{1}, {2}, {3}}));
  EXPECT_EQ(maximal.d, 0u);
  EXPECT_EQ(maximal.e0, 1);

  EXPECT_THROW(series_profile(MonomialIdeal::unit(3)), InputError);
}

TEST(SeriesProfileTest, DeflationIsExactAndAgreesWithPrimes) {
  std::mt19937_64 rng(59);
  const KPolynomial one_minus_t{1, -1};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto I = oracle::random_squarefree(rng, n, 2 * n);
    const auto profile = series_profile(I);
    ASSERT_EQ(power_of(one_minus_t, profile.vanishing_order) *
                  profile.deflated,
              profile.numerator);
    ASSERT_NE(profile.deflated.value_at_one(), 0);
    ASSERT_GE(profile.e0, 1);
    const auto dp = dim_profile(I);
    ASSERT_EQ(profile.d, dp.d) << I;
    ASSERT_EQ(profile.e0, dp.mu) << I;
  }
}

TEST(SeriesProfileTest, E0MatchesBruteForceDifferences) {
  // e0 from finite differences of the enumerated Hilbert function, never
  // touching the K-polynomial.
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto I = oracle::random_monomial_ideal(rng, n, 4, 2);
    const auto profile = series_profile(I);
    const auto expected = oracle::e0_by_differences(I, profile.d, 10);
    ASSERT_GE(expected, 0) << I;
    ASSERT_EQ(profile.e0, expected) << I;
  }
}

TEST(SeriesProfileTest, ZeroDimensionalLength) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::vector<std::size_t>> vars;
    for (std::size_t v = 1; v <= n; ++v) vars.push_back({v});
    const auto m = squarefree(n, vars);
    for (unsigned s = 1; s <= 4; ++s) {
      const auto I = power(m, s);
      const auto profile = series_profile(I);
      ASSERT_EQ(profile.d, 0u);
      std::int64_t length = 0;
      for (std::uint32_t a = 0; a < s; ++a) {
        length += static_cast<std::int64_t>(oracle::hilbert(I, a));
      }
      ASSERT_EQ(profile.e0, length);
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), n + s - 1, n);
      ASSERT_EQ(profile.e0, binom);
    }
  }
}

TEST(HilbertFunctionTest, Examples) {
  EXPECT_EQ(hilbert_function(minimalize({}, 2), 3), 4);
  const auto x1 = squarefree(1, {{1}});
  EXPECT_EQ(hilbert_function(x1, 0), 1);
  for (std::uint64_t a = 1; a <= 5; ++a) EXPECT_EQ(hilbert_function(x1, a), 0);
  // x2^4 and x1^i x3^(4-i): six standard monomials.
  EXPECT_EQ(hilbert_function(kTwoEdges, 4), 6);
}

TEST(HilbertFunctionTest, TwoEdgesIsLinear) {
  EXPECT_EQ(hilbert_function(kTwoEdges, 0), 1);
  for (std::uint64_t a = 1; a <= 12; ++a) {
    EXPECT_EQ(hilbert_function(kTwoEdges, a), a + 2);
  }
}

TEST(BruteForceHilbertTest, Examples) {
  for (std::uint64_t a = 0; a <= 12; ++a) {
    EXPECT_EQ(brute_force_hilbert_function(kTwoEdges, a),
              hilbert_function(kTwoEdges, a));
  }
  EXPECT_THROW(brute_force_hilbert_function(MonomialIdeal::unit(2), 1),
               InputError);
  EXPECT_EQ(brute_force_hilbert_function(minimalize({}, 3), 2), 6u);
}

TEST(BruteForceHilbertTest, EnumerationCap) {
  Limits tight;
  tight.max_enumeration = 10;
  EXPECT_THROW(brute_force_hilbert_function(kTriangle, 4, tight),
               ResourceError);
}

TEST(HilbertFunctionTest, AgreesWithOracleOnRandomIdealsAndSquares) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto base = oracle::random_squarefree(rng, n, 2 * n);
    for (const auto& I : {base, power(base, 2)}) {
      const auto numerator = k_polynomial(I);
      for (std::uint32_t a = 0; a <= 12; ++a) {
        ASSERT_EQ(hilbert_function(numerator, n, a), oracle::hilbert(I, a))
            << I << " a=" << a;
      }
    }
  }
}

TEST(HilbertWindowTest, TwoEdges) {
  const auto values = hilbert_polynomial_window(kTwoEdges, 3, 8);
  const std::vector<BigInt> expected{5, 6, 7, 8, 9, 10};
  EXPECT_EQ(values, expected);
  const auto first = finite_difference(values, 1);
  for (const auto& v : first) EXPECT_EQ(v, 1);
  for (const auto& v : finite_difference(values, 2)) EXPECT_EQ(v, 0);
}

TEST(HilbertWindowTest, ZeroDimensional) {
  const auto m2 = power(squarefree(2, {{1}, {2}}), 2);
  for (const auto& v : hilbert_polynomial_window(m2, 2, 5)) EXPECT_EQ(v, 0);

  const auto values = hilbert_polynomial_window(kTriangle, 2, 7);
  for (const auto& v : values) EXPECT_EQ(v, 3);
  for (const auto& v : finite_difference(values, 1)) EXPECT_EQ(v, 0);
}

TEST(HilbertWindowTest, TooSmall) {
  EXPECT_THROW(hilbert_polynomial_window(kTwoEdges, 3, 6), InputError);
  EXPECT_THROW(hilbert_polynomial_window(kTwoEdges, 6, 3), InputError);
}

TEST(HilbertWindowTest, LeadingDifferenceIsE0) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto I = power(oracle::random_squarefree(rng, n, n), 1 + trial % 3);
    const auto profile = series_profile(I);
    if (profile.d == 0) continue;
    const auto lo = static_cast<std::uint64_t>(profile.numerator.degree());
    const auto values = hilbert_polynomial_window(I, lo, lo + profile.d + 2);
    for (const auto& v : finite_difference(values, profile.d - 1)) {
      ASSERT_EQ(v, profile.e0) << I;
    }
  }
}

}  // namespace
}  // namespace sqmult
