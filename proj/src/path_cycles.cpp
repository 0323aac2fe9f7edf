#include "sqmult/path_cycles.hpp"

#include <algorithm>

#include "sqmult/errors.hpp"

namespace sqmult {

CycleIdealSpec::CycleIdealSpec(std::size_t n, std::size_t d) : n_(n), d_(d) {
  if (d < 2 || n <= d) {
    throw InputError("cycle path ideals need n > d >= 2, got n = " +
                     std::to_string(n) + ", d = " + std::to_string(d));
  }
}

MonomialIdeal cycle_path_ideal(const CycleIdealSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<Monomial> gens;
  gens.reserve(n);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<Exponent> exps(n, 0);
    for (std::size_t j = 0; j < spec.d(); ++j) exps[(start + j) % n] = 1;
    gens.emplace_back(std::move(exps));
  }
  return minimalize(std::move(gens), n);
}

namespace {

void check_tuple(const CycleIdealSpec& spec, std::span<const std::size_t> a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || a[i] > spec.n()) {
      throw InputError("index " + std::to_string(a[i]) + " outside 1.." +
                       std::to_string(spec.n()));
    }
    if (i > 0 && a[i] <= a[i - 1]) {
      throw InputError("index tuple must be strictly increasing");
    }
  }
}

}  // namespace

bool is_assoc_prime_cycle(const CycleIdealSpec& spec,
                          std::span<const std::size_t> a) {
  check_tuple(spec, a);
  if (a.empty()) return false;
  const std::size_t s = a.size();
  // ext[i] is a_{i+1}; the two wrap-around entries follow the definitions
  // a_{s+1} = a_1 + n and a_{s+2} = a_2 + n literally.
  std::vector<std::size_t> ext(a.begin(), a.end());
  ext.push_back(ext[0] + spec.n());
  ext.push_back(ext[1] + spec.n());
  for (std::size_t i = 0; i < s; ++i) {
    if (ext[i + 1] - ext[i] > spec.d()) return false;
    if (ext[i + 2] - ext[i] <= spec.d()) return false;
  }
  return true;
}

PrimeList enumerate_assoc_primes_cycle(const CycleIdealSpec& spec,
                                       std::size_t max_n) {
  const std::size_t n = spec.n();
  const std::size_t d = spec.d();
  if (n > max_n || n > PrimeSupport::kMaxVars) {
    throw ResourceError("associated-prime enumeration for n = " +
                        std::to_string(n) + " exceeds the limit of " +
                        std::to_string(std::min(max_n, PrimeSupport::kMaxVars)));
  }
  PrimeList out{n, {}};
  std::vector<std::size_t> tuple;
  // Consecutive gaps are at most d, including the wrap a_1 + n - a_s, so
  // a_1 <= d and every extension stays within d of its predecessor.
  auto rec = [&](auto&& self) -> void {
    const std::size_t last = tuple.back();
    if (last + d >= tuple.front() + n && is_assoc_prime_cycle(spec, tuple)) {
      out.primes.emplace_back(n, tuple);
    }
    for (std::size_t next = last + 1; next <= std::min(n, last + d); ++next) {
      tuple.push_back(next);
      self(self);
      tuple.pop_back();
    }
  };
  for (std::size_t first = 1; first <= std::min(n, d); ++first) {
    tuple.assign(1, first);
    rec(rec);
  }
  std::sort(out.primes.begin(), out.primes.end(),
            [](const PrimeSupport& x, const PrimeSupport& y) {
              return canonical_less(x, y);
            });
  return out;
}

std::size_t dim_cycle(const CycleIdealSpec& spec) {
  return spec.n() - (spec.n() + spec.d() - 1) / spec.d();
}

Monomial colon_witness(const CycleIdealSpec& spec,
                       std::span<const std::size_t> a) {
  check_tuple(spec, a);
  std::vector<Exponent> exps(spec.n(), 1);
  for (std::size_t v : a) exps[v - 1] = 0;
  return Monomial(std::move(exps));
}

}  // namespace sqmult
