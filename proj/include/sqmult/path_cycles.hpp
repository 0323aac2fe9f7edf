#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqmult/ideal.hpp"
#include "sqmult/primes.hpp"

namespace sqmult {

/// The d-path ideal of the n-cycle, n > d >= 2.
class CycleIdealSpec {
 public:
  CycleIdealSpec(std::size_t n, std::size_t d);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }

 private:
  std::size_t n_;
  std::size_t d_;
};

/// Largest n that enumerate_assoc_primes_cycle accepts by default.
inline constexpr std::size_t kDefaultCycleEnumerationLimit = 25;

/// I_{n,d} = (x_1...x_d, x_2...x_{d+1}, ..., x_n x_1...x_{d-1}).
MonomialIdeal cycle_path_ideal(const CycleIdealSpec& spec);

/// Whether (x_{a_1}, ..., x_{a_s}) is an associated prime of S/I_{n,d}, for
/// strictly increasing 1-based a. With a_{s+1} = a_1 + n and
/// a_{s+2} = a_2 + n, this holds iff for every i = 1..s both
///   a_{i+1} - a_i <= d   and   a_{i+2} - a_i > d.
/// Throws InputError if a is not strictly increasing within 1..n.
bool is_assoc_prime_cycle(const CycleIdealSpec& spec,
                          std::span<const std::size_t> a);

/// Every index tuple passing the criterion, canonically ordered. Throws
/// ResourceError when n exceeds max_n.
PrimeList enumerate_assoc_primes_cycle(
    const CycleIdealSpec& spec,
    std::size_t max_n = kDefaultCycleEnumerationLimit);

/// n - ceil(n / d).
std::size_t dim_cycle(const CycleIdealSpec& spec);

/// Product of the variables outside a; I_{n,d} : f = P_a when a passes the
/// criterion.
Monomial colon_witness(const CycleIdealSpec& spec,
                       std::span<const std::size_t> a);

}  // namespace sqmult
