#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sqmult/ideal.hpp"
#include "sqmult/limits.hpp"

namespace sqmult {

/// Bounds for the verification sweep. Defaults reproduce the full
/// acceptance run.
struct VerifyConfig {
  /// Random squarefree ideals: variable count in [1, max_n].
  std::size_t max_n = 6;
  /// Largest power s in the random-ideal sweeps.
  unsigned max_s = 3;
  std::size_t samples = 200;
  std::uint64_t seed = 20240601;
  /// Largest path length d considered in the cycle sweeps (0 = n - 1).
  std::size_t max_d = 0;
  /// Cycle sweeps: n <= cycle_max_n for s = 1, n <= cycle_power_max_n for
  /// s <= cycle_max_s.
  std::size_t cycle_max_n = 12;
  std::size_t cycle_power_max_n = 8;
  unsigned cycle_max_s = 3;
  /// Degrees checked against the brute-force Hilbert function.
  std::uint64_t max_degree = 12;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  Limits limits;
};

/// Outcome of one acceptance criterion.
struct CriterionResult {
  int id = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  /// Cases that hit a resource cap; excluded from pass/fail.
  std::size_t capped = 0;
  std::vector<std::string> failures;
  double ms = 0.0;
  bool ok = false;
};

struct VerifySummary {
  std::vector<CriterionResult> criteria;
  bool ok() const;
};

/// Nonzero proper squarefree ideal with a random variable count in
/// [1, max_n] and random generator supports. Depends only on the engine
/// state, so a fixed seed reproduces the sample on every platform.
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, std::size_t max_n);

/// The seeded sample shared by the random-ideal criteria.
std::vector<MonomialIdeal> random_sample(const VerifyConfig& config);

VerifySummary run_verification(const VerifyConfig& config);

std::string format_summary(const VerifySummary& summary);

}  // namespace sqmult
