#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sqmult/ideal.hpp"
#include "sqmult/kpoly.hpp"
#include "sqmult/limits.hpp"
#include "sqmult/primes.hpp"

namespace sqmult {

/// One multiplicity computation: the closed-form value next to the engine
/// value for the same (n, d, mu, s).
struct Report {
  std::string input;
  std::size_t n = 0;
  std::optional<std::size_t> d;
  std::optional<BigInt> mu;
  unsigned s = 1;
  std::optional<BigInt> e0_formula;
  std::optional<BigInt> e0_engine;
  double ms = 0.0;

  /// Set only when both values were computed.
  std::optional<bool> match() const;
};

/// Keys: input, n, d, mu, s, e0_formula, e0_engine, match, ms. Numbers are
/// decimal strings; values that were not computed are null.
nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);

struct MultOptions {
  unsigned power = 1;
  bool symbolic = false;
  bool formula_only = false;
  bool engine_only = false;
  Limits limits;
};

/// e0(S/I^s) by the closed form (squarefree I only) and by the Hilbert
/// engine on the expanded power, or on the symbolic power with symbolic set.
Report cmd_mult(const MonomialIdeal& ideal, const MultOptions& options);

struct CycleOptions {
  unsigned power = 1;
  bool formula_only = false;
  bool engine_only = false;
  Limits limits;
};

/// e0(S/I_{n,d}^s) by the cycle closed form, with an engine cross-check.
Report cmd_cycle(std::size_t n, std::size_t d, const CycleOptions& options);

nlohmann::json to_json(const PrimeList& primes);

}  // namespace sqmult
