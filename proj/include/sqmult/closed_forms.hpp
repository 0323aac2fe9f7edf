#pragma once

#include <cstdint>
#include <vector>

#include "sqmult/kpoly.hpp"

namespace sqmult {

/// n = k*d + r with k >= 1 and 1 <= r <= d, for n > d >= 2.
struct CycleParams {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t k = 0;
  std::uint64_t r = 0;

  friend bool operator==(const CycleParams&, const CycleParams&) = default;
};

/// C(a, b), zero when b < 0 or b > a.
BigInt binomial(std::uint64_t a, std::int64_t b);

/// mu * C(n - d + s - 1, s - 1), the multiplicity of S/I^s for a squarefree
/// I of dimension d with mu top-dimensional primes. Requires d < n, mu >= 1,
/// s >= 1.
BigInt e0_power_formula(std::uint64_t n, std::uint64_t d, const BigInt& mu,
                        std::uint64_t s);

CycleParams cycle_params(std::uint64_t n, std::uint64_t d);

/// Multiplicity of S/I_{n,d}: d*C(k+d-r, k) - C(k+d-r, k+1).
BigInt e0_cycle(std::uint64_t n, std::uint64_t d);

/// Multiplicity of S/I_{n,d}^s: e0_cycle(n, d) * C(k+s, s-1).
BigInt e0_cycle_power(std::uint64_t n, std::uint64_t d, std::uint64_t s);

using Tuple = std::vector<std::uint64_t>;

/// U_{k,d}: tuples (c_1..c_{k+1}) with 0 <= c_i <= d summing to k*d.
std::vector<Tuple> enumerate_U(std::uint64_t k, std::uint64_t d);
/// |U_{k,d}| = C(d+k, d).
BigInt count_U(std::uint64_t k, std::uint64_t d);

/// W_{k,d,r,s}: tuples (b_1..b_k) with b_i <= d summing to (k-1)d + r + s.
/// Requires k >= 1, 1 <= r <= d, s <= d - r.
std::vector<Tuple> enumerate_W(std::uint64_t k, std::uint64_t d,
                               std::uint64_t r, std::uint64_t s);

/// V_{k,d,r}: tuples (a_1, b_1..b_k) with a_1 >= 1, 1 <= b_i <= d,
/// sum b_i >= (k-1)d + r and a_1 + sum b_i <= k*d + r. These index the
/// minimum-size associated primes of S/I_{kd+r,d}.
std::vector<Tuple> enumerate_V(std::uint64_t k, std::uint64_t d,
                               std::uint64_t r);

/// sum_{s=0}^{d-r} (d - s) |W_{k,d,r,s}|, counted by enumeration.
BigInt weighted_W_sum(std::uint64_t k, std::uint64_t d, std::uint64_t r);

}  // namespace sqmult
