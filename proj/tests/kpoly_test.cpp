#include "sqmult/kpoly.hpp"

#include <gtest/gtest.h>

#include "sqmult/errors.hpp"

namespace sqmult {
namespace {

TEST(KPolynomialTest, TrimsTrailingZeros) {
  const KPolynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(KPolynomial({0, 0}).is_zero());
  EXPECT_EQ(KPolynomial().degree(), -1);
}

TEST(KPolynomialTest, Arithmetic) {
  const KPolynomial a{1, -1};
  const KPolynomial b{1, 1};
  EXPECT_EQ(a * b, (KPolynomial{1, 0, -1}));
  EXPECT_EQ(a + b, (KPolynomial{2}));
  EXPECT_EQ(a + KPolynomial({-1, 1}), KPolynomial());
  EXPECT_EQ(a.shifted(2), (KPolynomial{0, 0, 1, -1}));
  EXPECT_EQ(KPolynomial::one_minus_t_pow(3), (KPolynomial{1, 0, 0, -1}));
  EXPECT_EQ((KPolynomial{3, 4, 5}).value_at_one(), 12);
}

TEST(KPolynomialTest, DivideOneMinusT) {
  // 1 - 2t^2 + t^3 = (1 - t)(1 + t - t^2)
  EXPECT_EQ((KPolynomial{1, 0, -2, 1}).divide_one_minus_t(),
            (KPolynomial{1, 1, -1}));
  EXPECT_EQ(KPolynomial::one_minus_t_pow(6).divide_one_minus_t(),
            (KPolynomial{1, 1, 1, 1, 1, 1}));
  EXPECT_THROW((void)(KPolynomial{1, 1}).divide_one_minus_t(),
               InvariantError);
}

TEST(KPolynomialTest, BigCoefficients) {
  KPolynomial p = KPolynomial{1, 1};
  for (int i = 0; i < 6; ++i) p = p * p;  // (1 + t)^64
  EXPECT_EQ(p.coefficient(32).get_str(), "1832624140942590534");
  EXPECT_EQ(p.value_at_one().get_str(), "18446744073709551616");
}

}  // namespace
}  // namespace sqmult
