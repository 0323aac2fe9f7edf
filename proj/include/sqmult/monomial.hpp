#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sqmult {

using Exponent = std::uint32_t;

/// A monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// Product of the given 1-based variables, each to the first power.
  static Monomial squarefree(std::size_t n, std::span<const std::size_t> vars);
  /// x_var^exp in n variables; var is 1-based.
  static Monomial variable(std::size_t n, std::size_t var, Exponent exp = 1);

  std::size_t num_vars() const { return exps_.size(); }
  std::span<const Exponent> exponents() const { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  /// Bit i set iff variable i+1 occurs. Requires num_vars() <= 64.
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, f).
  Monomial colon(const Monomial& f) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "x1^2*x3", or "1" for the unit monomial.
  std::string to_string() const;

 private:
  std::vector<Exponent> exps_;
};

/// Canonical generator order: total degree ascending, then exponent vectors
/// lexicographically descending (x1 > x2 > ...).
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace sqmult
