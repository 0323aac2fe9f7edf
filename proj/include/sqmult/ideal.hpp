#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sqmult/limits.hpp"
#include "sqmult/monomial.hpp"

namespace sqmult {

/// Monomial prime (x_{a_1}, ..., x_{a_s}) of S = k[x_1..x_n], as a set of
/// 1-based variable indices. Limited to n <= 64.
class PrimeSupport {
 public:
  static constexpr std::size_t kMaxVars = 64;

  PrimeSupport(std::size_t n, std::uint64_t mask);
  PrimeSupport(std::size_t n, std::span<const std::size_t> vars);

  std::size_t num_vars() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t size() const;
  /// Strictly increasing 1-based indices.
  std::vector<std::size_t> vars() const;

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;

  /// "(x1,x3)".
  std::string to_string() const;

 private:
  std::size_t n_;
  std::uint64_t mask_;
};

/// Canonical prime order: by size, then lexicographic on sorted indices.
bool canonical_less(const PrimeSupport& a, const PrimeSupport& b);

/// Monomial ideal of S = k[x_1..x_n], held by its minimal generators in
/// canonical order. No generators is the zero ideal; the single generator 1
/// is the unit ideal.
class MonomialIdeal {
 public:
  /// The zero ideal in n variables.
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  static MonomialIdeal unit(std::size_t n);
  /// The prime P viewed as an ideal.
  static MonomialIdeal from_prime(const PrimeSupport& p);

  std::size_t num_vars() const { return n_; }
  std::span<const Monomial> gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// "x1*x2, x2*x3"; "0" for the zero ideal and "1" for the unit ideal.
  std::string to_string() const;

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> raw, std::size_t n);
  std::size_t n_;
  std::vector<Monomial> gens_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

/// Minimal generating set of the ideal generated by raw, canonically sorted.
/// Throws InputError if some monomial does not have n variables.
MonomialIdeal minimalize(std::vector<Monomial> raw, std::size_t n);

bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// I : f, generated by g / gcd(g, f).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);

/// I + (f).
MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& f);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b,
                       const Limits& limits = {});

/// I^s by repeated multiplication; s = 0 yields the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned s,
                    const Limits& limits = {});

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        const Limits& limits = {});

/// P^s: every degree-s monomial supported on P. Requires s >= 1.
MonomialIdeal prime_power(const PrimeSupport& p, unsigned s);

/// I^(s) = P_1^s ∩ ... ∩ P_m^s where primes are the minimal primes of I.
/// Throws InputError on an empty prime list.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned s,
                             std::span<const PrimeSupport> primes,
                             const Limits& limits = {});

}  // namespace sqmult
