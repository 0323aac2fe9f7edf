#include "sqmult/closed_forms.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "sqmult/errors.hpp"

namespace sqmult {
namespace {

TEST(BinomialTest, Examples) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(1, 2), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(100, 50).get_str(),
            "100891344545564193334812497256");
}

TEST(BinomialTest, HockeyStick) {
  for (std::uint64_t k = 0; k <= 30; ++k) {
    BigInt running = 0;
    for (std::uint64_t m = 0; m <= 30; ++m) {
      running += binomial(k + m, static_cast<std::int64_t>(m));
      ASSERT_EQ(running, binomial(k + m + 1, static_cast<std::int64_t>(m)));
    }
  }
}

TEST(PowerFormulaTest, Examples) {
  EXPECT_EQ(e0_power_formula(6, 3, 7, 1), 7);
  EXPECT_EQ(e0_power_formula(1, 0, 1, 5), 5);
  // Triangle: n = 3, d = 1, mu = 3.
  EXPECT_EQ(e0_power_formula(3, 1, 3, 2), 9);
  EXPECT_EQ(e0_power_formula(3, 1, 3, 3), 18);
  EXPECT_EQ(e0_power_formula(5, 2, 5, 2), 20);
}

TEST(PowerFormulaTest, Preconditions) {
  EXPECT_THROW(e0_power_formula(3, 3, 1, 1), InputError);
  EXPECT_THROW(e0_power_formula(3, 1, 0, 1), InputError);
  EXPECT_THROW(e0_power_formula(3, 1, 1, 0), InputError);
}

TEST(CycleParamsTest, Examples) {
  EXPECT_EQ(cycle_params(5, 2), (CycleParams{5, 2, 2, 1}));
  EXPECT_EQ(cycle_params(6, 3), (CycleParams{6, 3, 1, 3}));
  EXPECT_EQ(cycle_params(7, 3), (CycleParams{7, 3, 2, 1}));
  EXPECT_THROW(cycle_params(3, 3), InputError);
  EXPECT_THROW(cycle_params(5, 1), InputError);
}

TEST(CycleParamsTest, Decomposition) {
  for (std::uint64_t d = 2; d <= 10; ++d) {
    for (std::uint64_t n = d + 1; n <= 60; ++n) {
      const auto p = cycle_params(n, d);
      ASSERT_GE(p.k, 1u);
      ASSERT_GE(p.r, 1u);
      ASSERT_LE(p.r, d);
      ASSERT_EQ(p.k * d + p.r, n);
    }
  }
}

TEST(CycleMultiplicityTest, Examples) {
  EXPECT_EQ(e0_cycle(3, 2), 3);
  EXPECT_EQ(e0_cycle(5, 2), 5);
  EXPECT_EQ(e0_cycle(4, 2), 2);
  EXPECT_EQ(e0_cycle(6, 3), 3);
  EXPECT_EQ(e0_cycle_power(3, 2, 2), 9);
  EXPECT_EQ(e0_cycle_power(5, 2, 2), 20);
  for (std::uint64_t n = 3; n <= 12; ++n) {
    EXPECT_EQ(e0_cycle_power(n, 2, 1), e0_cycle(n, 2));
  }
  EXPECT_THROW(e0_cycle_power(5, 2, 0), InputError);
}

TEST(EnumerateUTest, Examples) {
  EXPECT_EQ(enumerate_U(1, 1), (std::vector<Tuple>{{0, 1}, {1, 0}}));
  EXPECT_EQ(enumerate_U(2, 2).size(), 6u);
  EXPECT_EQ(enumerate_U(3, 0), (std::vector<Tuple>{{0, 0, 0, 0}}));
  EXPECT_EQ(enumerate_U(0, 4), (std::vector<Tuple>{{0}}));
}

TEST(EnumerateUTest, CountAndShape) {
  for (std::uint64_t k = 0; k <= 8; ++k) {
    for (std::uint64_t d = 0; d <= 8; ++d) {
      const auto tuples = enumerate_U(k, d);
      ASSERT_EQ(to_big(tuples.size()), count_U(k, d));
      for (const auto& t : tuples) {
        ASSERT_EQ(t.size(), k + 1);
        ASSERT_EQ(std::accumulate(t.begin(), t.end(), std::uint64_t{0}),
                  k * d);
        for (auto c : t) ASSERT_LE(c, d);
      }
    }
  }
}

TEST(EnumerateWTest, Examples) {
  EXPECT_EQ(enumerate_W(2, 2, 1, 0), (std::vector<Tuple>{{1, 2}, {2, 1}}));
  EXPECT_EQ(enumerate_W(2, 2, 1, 1), (std::vector<Tuple>{{2, 2}}));
  EXPECT_EQ(enumerate_W(1, 2, 1, 0), (std::vector<Tuple>{{1}}));
  EXPECT_THROW(enumerate_W(0, 2, 1, 0), InputError);
  EXPECT_THROW(enumerate_W(2, 2, 3, 0), InputError);
  EXPECT_THROW(enumerate_W(2, 2, 1, 2), InputError);
}

TEST(EnumerateWTest, ComplementBijectionWithU) {
  // b -> (d - b_1, ..., d - b_k) lands in compositions counted by U.
  for (std::uint64_t k = 1; k <= 6; ++k) {
    for (std::uint64_t d = 1; d <= 6; ++d) {
      for (std::uint64_t r = 1; r <= d; ++r) {
        for (std::uint64_t s = 0; s <= d - r; ++s) {
          const auto w = enumerate_W(k, d, r, s);
          ASSERT_EQ(to_big(w.size()), count_U(k - 1, d - r - s))
              << k << " " << d << " " << r << " " << s;
          for (const auto& b : w) {
            std::uint64_t gap = 0;
            for (auto x : b) gap += d - x;
            ASSERT_EQ(gap, d - r - s);
          }
        }
      }
    }
  }
}

TEST(EnumerateVTest, Examples) {
  EXPECT_EQ(enumerate_V(2, 2, 1),
            (std::vector<Tuple>{
                {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}}));
  EXPECT_EQ(enumerate_V(1, 3, 3).size(), 3u);
  EXPECT_EQ(enumerate_V(1, 2, 2).size(), 2u);
}

TEST(EnumerateVTest, WeightedWSumAndCycleMultiplicity) {
  for (std::uint64_t k = 1; k <= 6; ++k) {
    for (std::uint64_t d = 1; d <= 6; ++d) {
      for (std::uint64_t r = 1; r <= d; ++r) {
        const auto v = to_big(enumerate_V(k, d, r).size());
        ASSERT_EQ(v, weighted_W_sum(k, d, r)) << k << " " << d << " " << r;
        if (d >= 2) ASSERT_EQ(v, e0_cycle(k * d + r, d));
      }
    }
  }
}

}  // namespace
}  // namespace sqmult
