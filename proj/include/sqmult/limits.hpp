#pragma once

#include <cstddef>
#include <cstdint>

namespace sqmult {

/// Resource caps shared by the arithmetic and the Hilbert engine.
struct Limits {
  /// Largest generator set multiply/power/intersect may produce.
  std::size_t max_generators = 200'000;
  /// Largest number of pivot-recursion nodes per K-polynomial.
  std::uint64_t max_nodes = 10'000'000;
  /// Largest number of monomials the brute-force Hilbert function enumerates.
  std::uint64_t max_enumeration = 100'000'000;
};

}  // namespace sqmult
