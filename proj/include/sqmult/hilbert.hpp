#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqmult/ideal.hpp"
#include "sqmult/kpoly.hpp"
#include "sqmult/limits.hpp"

namespace sqmult {

/// How the pivot recursion picks its pivot monomial p in
///   K(I) = K(I + (p)) + t^{deg p} K(I : p).
enum class PivotStrategy {
  /// The variable dividing the most generators.
  kMostFrequentVariable,
  /// The lowest-index variable dividing at least two generators.
  kFirstSharedVariable,
  /// gcd of the first two generators that share a variable.
  kPairGcd,
};

/// Hilbert series data of S/I with the numerator normalized to (1-t)^n.
struct SeriesProfile {
  std::size_t n = 0;
  KPolynomial numerator;
  /// Multiplicity of t = 1 as a root of the numerator.
  std::size_t vanishing_order = 0;
  KPolynomial deflated;
  /// Krull dimension n - vanishing_order.
  std::size_t d = 0;
  /// deflated(1); the total length of S/I when d = 0.
  BigInt e0;
};

/// Numerator K(t) with Hilb_{S/I}(t) = K(t) / (1 - t)^n. The unit ideal has
/// K = 0 and the zero ideal K = 1. Throws ResourceError past limits.max_nodes.
KPolynomial k_polynomial(
    const MonomialIdeal& ideal, const Limits& limits = {},
    PivotStrategy strategy = PivotStrategy::kMostFrequentVariable);

/// Factors (1 - t)^c out of the numerator. Throws InputError for the unit
/// ideal.
SeriesProfile series_profile(const KPolynomial& numerator, std::size_t n);
SeriesProfile series_profile(const MonomialIdeal& ideal,
                             const Limits& limits = {});

/// dim_k (S/I)_a from the K-polynomial.
BigInt hilbert_function(const KPolynomial& numerator, std::size_t n,
                        std::uint64_t a);
BigInt hilbert_function(const MonomialIdeal& ideal, std::uint64_t a,
                        const Limits& limits = {});

/// Literal count of degree-a monomials outside I. Shares nothing with the
/// pivot recursion. Throws InputError for the unit ideal and ResourceError
/// when C(n+a-1, a) exceeds limits.max_enumeration.
std::uint64_t brute_force_hilbert_function(const MonomialIdeal& ideal,
                                           std::uint64_t a,
                                           const Limits& limits = {});

/// H(a) for a in [a_lo, a_hi]. Requires a_hi - a_lo >= dim(S/I) + 2 so the
/// difference table has at least three rows of the relevant order.
std::vector<BigInt> hilbert_polynomial_window(const MonomialIdeal& ideal,
                                              std::uint64_t a_lo,
                                              std::uint64_t a_hi,
                                              const Limits& limits = {});

/// The order-th forward difference of values (length shrinks by order).
std::vector<BigInt> finite_difference(std::vector<BigInt> values,
                                      std::size_t order);

}  // namespace sqmult
