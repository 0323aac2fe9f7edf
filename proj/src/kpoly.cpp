#include "sqmult/kpoly.hpp"

#include <ostream>

#include "sqmult/errors.hpp"

namespace sqmult {

KPolynomial::KPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

KPolynomial::KPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

KPolynomial KPolynomial::one_minus_t_pow(std::size_t k) {
  if (k == 0) return KPolynomial();
  std::vector<BigInt> c(k + 1, 0);
  c[0] = 1;
  c[k] = -1;
  return KPolynomial(std::move(c));
}

void KPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt KPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt KPolynomial::value_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), 0);
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

KPolynomial KPolynomial::operator+(const KPolynomial& other) const {
  KPolynomial out = *this;
  out += other;
  return out;
}

KPolynomial KPolynomial::operator*(const KPolynomial& other) const {
  if (is_zero() || other.is_zero()) return KPolynomial();
  std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return KPolynomial(std::move(c));
}

KPolynomial KPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(k, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return KPolynomial(std::move(c));
}

KPolynomial KPolynomial::divide_one_minus_t() const {
  if (is_zero()) return {};
  // q = (1 - t) r  gives  r_i = q_i + r_{i-1}; the running sum through the
  // top coefficient is the remainder.
  std::vector<BigInt> r(coeffs_.size() - 1);
  BigInt running = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    running += coeffs_[i];
    r[i] = running;
  }
  running += coeffs_.back();
  if (running != 0) {
    throw InvariantError("polynomial " + to_string() +
                         " is not divisible by (1 - t)");
  }
  return KPolynomial(std::move(r));
}

std::string KPolynomial::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ", ";
    out += coeffs_[i].get_str();
  }
  return out + ']';
}

std::ostream& operator<<(std::ostream& os, const KPolynomial& p) {
  return os << p.to_string();
}

}  // namespace sqmult
