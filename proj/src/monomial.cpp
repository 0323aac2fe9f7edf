#include "sqmult/monomial.hpp"

#include <algorithm>
#include <ostream>

#include "sqmult/errors.hpp"

namespace sqmult {

namespace {

void check_same_vars(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw InputError("monomials live in rings of different size (" +
                     std::to_string(a.num_vars()) + " vs " +
                     std::to_string(b.num_vars()) + " variables)");
  }
}

template <typename Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  check_same_vars(a, b);
  std::vector<Exponent> out(a.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return Monomial(std::move(out));
}

}  // namespace

Monomial Monomial::squarefree(std::size_t n,
                              std::span<const std::size_t> vars) {
  Monomial m(n);
  for (std::size_t v : vars) {
    if (v == 0 || v > n) {
      throw InputError("variable index " + std::to_string(v) +
                       " outside 1.." + std::to_string(n));
    }
    m.exps_[v - 1] = 1;
  }
  return m;
}

Monomial Monomial::variable(std::size_t n, std::size_t var, Exponent exp) {
  if (var == 0 || var > n) {
    throw InputError("variable index " + std::to_string(var) +
                     " outside 1.." + std::to_string(n));
  }
  Monomial m(n);
  m.exps_[var - 1] = exp;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::support_mask() const {
  if (exps_.size() > 64) {
    throw InputError("support masks need at most 64 variables");
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  check_same_vars(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same_vars(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  return combine(*this, other, [](Exponent x, Exponent y) { return x + y; });
}

Monomial Monomial::lcm(const Monomial& other) const {
  return combine(*this, other,
                 [](Exponent x, Exponent y) { return std::max(x, y); });
}

Monomial Monomial::gcd(const Monomial& other) const {
  return combine(*this, other,
                 [](Exponent x, Exponent y) { return std::min(x, y); });
}

Monomial Monomial::colon(const Monomial& f) const {
  return combine(*this, f,
                 [](Exponent x, Exponent y) { return x > y ? x - y : 0; });
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  // Descending lex: x1^2 before x1*x2 before x2^2.
  return std::lexicographical_compare(b.exponents().begin(),
                                      b.exponents().end(),
                                      a.exponents().begin(),
                                      a.exponents().end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << m.to_string();
}

}  // namespace sqmult
