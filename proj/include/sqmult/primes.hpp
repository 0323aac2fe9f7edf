#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sqmult/ideal.hpp"

namespace sqmult {

/// Minimal primes of a squarefree monomial ideal, canonically ordered.
struct PrimeList {
  std::size_t n = 0;
  std::vector<PrimeSupport> primes;
};

/// Krull dimension of S/I and the number of minimal primes attaining it.
struct DimProfile {
  std::size_t d = 0;
  std::size_t mu = 0;
  std::size_t height = 0;

  friend bool operator==(const DimProfile&, const DimProfile&) = default;
};

/// Minimal transversals of the hypergraph whose edges are the given
/// nonempty vertex masks over n <= 64 vertices, canonically ordered.
std::vector<std::uint64_t> minimal_transversals(
    std::span<const std::uint64_t> edges, std::size_t n);

/// Minimal primes of a nonzero proper squarefree monomial ideal; these are
/// all of its associated primes. Throws InputError otherwise.
PrimeList minimal_primes(const MonomialIdeal& ideal);

DimProfile dim_profile(const PrimeList& primes);
DimProfile dim_profile(const MonomialIdeal& ideal);

/// Intersection of the minimal primes of minimum height.
MonomialIdeal unmixed_part(const MonomialIdeal& ideal);

}  // namespace sqmult
