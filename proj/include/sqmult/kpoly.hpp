#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sqmult {

using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return BigInt(static_cast<unsigned long>(v));
}

/// Univariate polynomial in t with arbitrary-precision integer coefficients.
/// Coefficient i multiplies t^i; trailing zeros are never stored, so the
/// zero polynomial has no coefficients.
class KPolynomial {
 public:
  KPolynomial() = default;
  explicit KPolynomial(std::vector<BigInt> coeffs);
  KPolynomial(std::initializer_list<long> coeffs);

  static KPolynomial one() { return KPolynomial({1}); }
  /// 1 - t^k.
  static KPolynomial one_minus_t_pow(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigInt> coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t i) const;

  BigInt value_at_one() const;

  KPolynomial& operator+=(const KPolynomial& other);
  KPolynomial operator+(const KPolynomial& other) const;
  KPolynomial operator*(const KPolynomial& other) const;
  /// this * t^k.
  KPolynomial shifted(std::size_t k) const;

  /// Exact quotient by (1 - t); throws InvariantError on a nonzero remainder.
  KPolynomial divide_one_minus_t() const;

  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;

  /// Coefficient list, e.g. "[1, 0, -2, 1]".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const KPolynomial& p);

}  // namespace sqmult
