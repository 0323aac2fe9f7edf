#include "sqmult/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "sqmult/errors.hpp"

namespace sqmult {

namespace {

BigInt binomial_ui(std::uint64_t top, std::uint64_t bottom) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), top, bottom);
  return out;
}

// Groups generators into classes linked by shared variables.
std::vector<std::vector<std::size_t>> variable_components(
    const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  const auto gens = ideal.gens();
  std::vector<std::size_t> parent(gens.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> owner(n, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t v = 0; v < n; ++v) {
      if (gens[g][v] == 0) continue;
      if (owner[v] == gens.size()) {
        owner[v] = g;
      } else {
        parent[find(g)] = find(owner[v]);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(gens.size(), gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::size_t root = find(g);
    if (slot[root] == gens.size()) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(g);
  }
  return groups;
}

class PivotRecursion {
 public:
  PivotRecursion(const Limits& limits, PivotStrategy strategy)
      : limits_(limits), strategy_(strategy) {}

  KPolynomial run(const MonomialIdeal& ideal) {
    if (++nodes_ > limits_.max_nodes) {
      throw ResourceError("K-polynomial recursion exceeded " +
                          std::to_string(limits_.max_nodes) + " nodes");
    }
    if (ideal.is_zero()) return KPolynomial::one();
    if (ideal.is_unit()) return KPolynomial();
    if (ideal.size() == 1) {
      return KPolynomial::one_minus_t_pow(ideal.gens().front().degree());
    }

    // Generators in different variable classes contribute independent
    // factors; pairwise-coprime generators are the fully split case.
    const auto groups = variable_components(ideal);
    if (groups.size() > 1) {
      KPolynomial product = KPolynomial::one();
      for (const auto& group : groups) {
        if (group.size() == 1) {
          product = product * KPolynomial::one_minus_t_pow(
                                  ideal.gens()[group.front()].degree());
          continue;
        }
        std::vector<Monomial> part;
        part.reserve(group.size());
        for (std::size_t g : group) part.push_back(ideal.gens()[g]);
        product = product * run(minimalize(std::move(part), ideal.num_vars()));
      }
      return product;
    }

    const Monomial pivot = choose_pivot(ideal);
    KPolynomial sum = run(add_generator(ideal, pivot));
    sum += run(colon(ideal, pivot)).shifted(pivot.degree());
    return sum;
  }

 private:
  Monomial choose_pivot(const MonomialIdeal& ideal) const {
    const std::size_t n = ideal.num_vars();
    const auto gens = ideal.gens();
    if (strategy_ == PivotStrategy::kPairGcd) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          if (!gens[i].coprime(gens[j])) return gens[i].gcd(gens[j]);
        }
      }
      throw InvariantError("pivot requested for pairwise-coprime generators");
    }
    std::vector<std::size_t> counts(n, 0);
    for (const auto& g : gens) {
      for (std::size_t v = 0; v < n; ++v) counts[v] += g[v] != 0 ? 1 : 0;
    }
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (counts[v] < 2) continue;
      if (strategy_ == PivotStrategy::kFirstSharedVariable) {
        best = v;
        break;
      }
      if (best == n || counts[v] > counts[best]) best = v;
    }
    if (best == n) {
      throw InvariantError("pivot requested for pairwise-coprime generators");
    }
    return Monomial::variable(n, best + 1);
  }

  const Limits& limits_;
  PivotStrategy strategy_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

KPolynomial k_polynomial(const MonomialIdeal& ideal, const Limits& limits,
                         PivotStrategy strategy) {
  return PivotRecursion(limits, strategy).run(ideal);
}

SeriesProfile series_profile(const KPolynomial& numerator, std::size_t n) {
  if (numerator.is_zero()) {
    throw InputError("S/I is zero for the unit ideal; no Hilbert series data");
  }
  SeriesProfile profile;
  profile.n = n;
  profile.numerator = numerator;
  profile.deflated = numerator;
  while (profile.deflated.value_at_one() == 0) {
    profile.deflated = profile.deflated.divide_one_minus_t();
    ++profile.vanishing_order;
  }
  if (profile.vanishing_order > n) {
    throw InvariantError("numerator vanishes to order " +
                         std::to_string(profile.vanishing_order) +
                         " at t = 1 in only " + std::to_string(n) +
                         " variables");
  }
  profile.d = n - profile.vanishing_order;
  profile.e0 = profile.deflated.value_at_one();
  if (profile.e0 <= 0) {
    throw InvariantError("multiplicity " + profile.e0.get_str() +
                         " is not positive");
  }
  return profile;
}

SeriesProfile series_profile(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_unit()) {
    throw InputError("S/I is zero for the unit ideal; no Hilbert series data");
  }
  return series_profile(k_polynomial(ideal, limits), ideal.num_vars());
}

BigInt hilbert_function(const KPolynomial& numerator, std::size_t n,
                        std::uint64_t a) {
  BigInt h = 0;
  const auto coeffs = numerator.coefficients();
  if (n == 0) return numerator.coefficient(a);
  if (coeffs.empty()) return h;
  const std::uint64_t top = std::min<std::uint64_t>(a, coeffs.size() - 1);
  for (std::uint64_t i = 0; i <= top; ++i) {
    if (coeffs[i] == 0) continue;
    h += coeffs[i] * binomial_ui(a - i + n - 1, n - 1);
  }
  return h;
}

BigInt hilbert_function(const MonomialIdeal& ideal, std::uint64_t a,
                        const Limits& limits) {
  return hilbert_function(k_polynomial(ideal, limits), ideal.num_vars(), a);
}

std::uint64_t brute_force_hilbert_function(const MonomialIdeal& ideal,
                                           std::uint64_t a,
                                           const Limits& limits) {
  if (ideal.is_unit()) {
    throw InputError("brute-force Hilbert function of the unit ideal");
  }
  const std::size_t n = ideal.num_vars();
  if (n == 0) return a == 0 ? 1 : 0;
  const BigInt total = binomial_ui(n + a - 1, a);
  if (total > to_big(limits.max_enumeration)) {
    throw ResourceError("brute-force enumeration of " + total.get_str() +
                        " monomials exceeds the cap of " +
                        std::to_string(limits.max_enumeration));
  }

  std::vector<Exponent> exps(n, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t idx, std::uint64_t left) -> void {
    if (idx + 1 == n) {
      exps[idx] = static_cast<Exponent>(left);
      if (!contains(ideal, Monomial(exps))) ++count;
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      exps[idx] = static_cast<Exponent>(e);
      self(self, idx + 1, left - e);
    }
  };
  rec(rec, 0, a);
  return count;
}

std::vector<BigInt> hilbert_polynomial_window(const MonomialIdeal& ideal,
                                              std::uint64_t a_lo,
                                              std::uint64_t a_hi,
                                              const Limits& limits) {
  const auto profile = series_profile(ideal, limits);
  if (a_hi < a_lo || a_hi - a_lo < profile.d + 2) {
    throw InputError("window [" + std::to_string(a_lo) + ", " +
                     std::to_string(a_hi) + "] is too small for dimension " +
                     std::to_string(profile.d) + "; need a_hi - a_lo >= " +
                     std::to_string(profile.d + 2));
  }
  std::vector<BigInt> values;
  values.reserve(a_hi - a_lo + 1);
  for (std::uint64_t a = a_lo; a <= a_hi; ++a) {
    values.push_back(hilbert_function(profile.numerator, ideal.num_vars(), a));
  }
  return values;
}

std::vector<BigInt> finite_difference(std::vector<BigInt> values,
                                      std::size_t order) {
  for (std::size_t k = 0; k < order && !values.empty(); ++k) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      values[i] = values[i + 1] - values[i];
    }
    values.pop_back();
  }
  return values;
}

}  // namespace sqmult
