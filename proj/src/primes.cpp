#include "sqmult/primes.hpp"

#include <algorithm>
#include <bit>

#include "sqmult/errors.hpp"

namespace sqmult {

namespace {

struct TransversalSearch {
  std::span<const std::uint64_t> edges;
  std::vector<std::uint64_t> found;

  // Every chosen vertex must keep an edge that only it covers.
  bool all_private(std::uint64_t chosen) const {
    for (std::uint64_t rest = chosen; rest != 0; rest &= rest - 1) {
      const std::uint64_t v = rest & (~rest + 1);
      bool has_private = false;
      for (std::uint64_t e : edges) {
        if ((e & chosen) == v) {
          has_private = true;
          break;
        }
      }
      if (!has_private) return false;
    }
    return true;
  }

  void run(std::uint64_t chosen, std::uint64_t excluded) {
    auto uncovered = std::find_if(edges.begin(), edges.end(),
                                  [&](std::uint64_t e) {
                                    return (e & chosen) == 0;
                                  });
    if (uncovered == edges.end()) {
      found.push_back(chosen);
      return;
    }
    // Branch i picks the i-th vertex of the edge and bans the earlier ones,
    // so each transversal is reached along one path only.
    std::uint64_t banned = excluded;
    for (std::uint64_t rest = *uncovered & ~excluded; rest != 0;
         rest &= rest - 1) {
      const std::uint64_t v = rest & (~rest + 1);
      const std::uint64_t next = chosen | v;
      if (all_private(next)) run(next, banned);
      banned |= v;
    }
  }
};

bool mask_less(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on sorted indices: the lowest differing bit decides.
  const std::uint64_t diff = a ^ b;
  const std::uint64_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

void require_squarefree_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InputError("the zero ideal has no minimal primes");
  if (ideal.is_unit()) throw InputError("the unit ideal has no minimal primes");
  if (!ideal.is_squarefree()) {
    throw InputError("minimal primes are only computed for squarefree ideals");
  }
  if (ideal.num_vars() > PrimeSupport::kMaxVars) {
    throw InputError("prime computations support at most 64 variables");
  }
}

}  // namespace

std::vector<std::uint64_t> minimal_transversals(
    std::span<const std::uint64_t> edges, std::size_t n) {
  if (n > PrimeSupport::kMaxVars) {
    throw InputError("transversal search supports at most 64 vertices");
  }
  for (std::uint64_t e : edges) {
    if (e == 0) throw InputError("hypergraph has an empty edge");
    if (n < 64 && (e >> n) != 0) {
      throw InputError("hypergraph edge uses a vertex beyond " +
                       std::to_string(n));
    }
  }
  TransversalSearch search{edges, {}};
  search.run(0, 0);
  auto& found = search.found;
  std::sort(found.begin(), found.end(), mask_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());

  // Pairwise subset filter. Sorted by size, so a proper subset comes first.
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t t : found) {
    const bool dominated =
        std::any_of(minimal.begin(), minimal.end(), [&](std::uint64_t m) {
          return (m & t) == m && m != t;
        });
    if (!dominated) minimal.push_back(t);
  }
  return minimal;
}

PrimeList minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree_proper(ideal);
  std::vector<std::uint64_t> edges;
  edges.reserve(ideal.size());
  for (const auto& g : ideal.gens()) edges.push_back(g.support_mask());

  PrimeList out{ideal.num_vars(), {}};
  for (std::uint64_t t : minimal_transversals(edges, ideal.num_vars())) {
    out.primes.emplace_back(ideal.num_vars(), t);
  }
  return out;
}

DimProfile dim_profile(const PrimeList& primes) {
  if (primes.primes.empty()) throw InputError("empty prime list");
  DimProfile profile;
  profile.height = primes.primes.front().size();
  for (const auto& p : primes.primes) {
    if (p.size() < profile.height) {
      profile.height = p.size();
      profile.mu = 0;
    }
    if (p.size() == profile.height) ++profile.mu;
  }
  profile.d = primes.n - profile.height;
  return profile;
}

DimProfile dim_profile(const MonomialIdeal& ideal) {
  return dim_profile(minimal_primes(ideal));
}

MonomialIdeal unmixed_part(const MonomialIdeal& ideal) {
  const auto primes = minimal_primes(ideal);
  const auto profile = dim_profile(primes);
  auto result = MonomialIdeal::unit(ideal.num_vars());
  for (const auto& p : primes.primes) {
    if (p.size() == profile.height) {
      result = intersect(result, MonomialIdeal::from_prime(p));
    }
  }
  return result;
}

}  // namespace sqmult
