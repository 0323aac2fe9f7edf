#pragma once

// Brute-force references for the tests. Everything here works on raw
// exponent vectors and bitmasks and calls nothing from the library under
// test beyond reading generators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "sqmult/ideal.hpp"

namespace sqmult::oracle {

using Exps = std::vector<std::uint32_t>;

inline std::vector<Exps> generators(const MonomialIdeal& ideal) {
  std::vector<Exps> out;
  for (const auto& g : ideal.gens()) {
    out.emplace_back(g.exponents().begin(), g.exponents().end());
  }
  return out;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool member(const std::vector<Exps>& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Exps& g) { return divides(g, m); });
}

/// Every monomial in n variables of degree exactly a.
inline std::vector<Exps> monomials_of_degree(std::size_t n, std::uint32_t a) {
  std::vector<Exps> out;
  Exps cur(n, 0);
  auto rec = [&](auto&& self, std::size_t idx, std::uint32_t left) -> void {
    if (idx + 1 == n) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[idx] = e;
      self(self, idx + 1, left - e);
    }
  };
  if (n == 0) {
    if (a == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, a);
  return out;
}

inline std::vector<Exps> monomials_up_to(std::size_t n, std::uint32_t max_deg) {
  std::vector<Exps> out;
  for (std::uint32_t a = 0; a <= max_deg; ++a) {
    auto layer = monomials_of_degree(n, a);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Number of degree-a monomials outside the ideal.
inline std::uint64_t hilbert(const MonomialIdeal& ideal, std::uint32_t a) {
  const auto gens = generators(ideal);
  std::uint64_t count = 0;
  for (const auto& m : monomials_of_degree(ideal.num_vars(), a)) {
    if (!member(gens, m)) ++count;
  }
  return count;
}

/// Minimal vertex covers of the support hypergraph by scanning all 2^n
/// subsets, as masks sorted by (size, lexicographic indices).
inline std::vector<std::uint64_t> minimal_covers(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::uint64_t> edges;
  for (const auto& g : generators(ideal)) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] != 0) mask |= std::uint64_t{1} << i;
    }
    edges.push_back(mask);
  }
  auto covers = [&](std::uint64_t set) {
    return std::all_of(edges.begin(), edges.end(),
                       [&](std::uint64_t e) { return (e & set) != 0; });
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << n); ++set) {
    if (!covers(set)) continue;
    bool minimal = true;
    for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
      if (covers(set & ~(rest & (~rest + 1)))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(set);
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    auto idx = [](std::uint64_t m) {
      std::vector<int> v;
      for (int i = 0; i < 64; ++i) {
        if ((m >> i) & 1) v.push_back(i);
      }
      return v;
    };
    const auto va = idx(a);
    const auto vb = idx(b);
    if (va.size() != vb.size()) return va.size() < vb.size();
    return va < vb;
  });
  return out;
}

/// e0 of S/I from the brute-force Hilbert function, given dim S/I = dim.
/// For dim >= 1 this is the (dim-1)-th forward difference of H, taken at
/// degrees from `start` on and required to be constant over a few steps;
/// for dim = 0 it is the total count of standard monomials.
inline std::int64_t e0_by_differences(const MonomialIdeal& ideal,
                                      std::size_t dim, std::uint32_t start) {
  if (dim == 0) {
    std::int64_t total = 0;
    for (std::uint32_t a = 0;; ++a) {
      const auto h = static_cast<std::int64_t>(hilbert(ideal, a));
      if (h == 0) return total;
      total += h;
    }
  }
  const std::size_t order = dim - 1;
  const std::size_t rows = order + 3;
  std::vector<std::int64_t> values;
  for (std::size_t i = 0; i < rows; ++i) {
    values.push_back(
        static_cast<std::int64_t>(hilbert(ideal, start + static_cast<std::uint32_t>(i))));
  }
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      values[i] = values[i + 1] - values[i];
    }
    values.pop_back();
  }
  // Non-constant tail means start was below the regularity.
  for (auto v : values) {
    if (v != values.front()) return -1;
  }
  return values.front();
}

/// Random nonzero proper squarefree ideal in exactly n variables.
inline MonomialIdeal random_squarefree(std::mt19937_64& rng, std::size_t n,
                                       std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<std::uint64_t> subset(
      1, (std::uint64_t{1} << n) - 1);
  std::vector<Monomial> gens;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    const auto mask = subset(rng);
    std::vector<Exponent> e(n, 0);
    for (std::size_t v = 0; v < n; ++v) e[v] = (mask >> v) & 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), n);
}

/// Random monomial ideal (not necessarily squarefree) with exponents <= max_exp.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t n,
                                           std::size_t max_gens,
                                           std::uint32_t max_exp) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  std::vector<Monomial> gens;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Exponent> e(n, 0);
    bool nonzero = false;
    for (auto& x : e) {
      x = exp(rng);
      nonzero |= x != 0;
    }
    if (!nonzero) e[0] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), n);
}

}  // namespace sqmult::oracle
