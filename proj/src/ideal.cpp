#include "sqmult/ideal.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "sqmult/errors.hpp"

namespace sqmult {

// ---------------------------------------------------------------------------
// PrimeSupport

PrimeSupport::PrimeSupport(std::size_t n, std::uint64_t mask)
    : n_(n), mask_(mask) {
  if (n > kMaxVars) {
    throw InputError("prime supports are limited to " +
                     std::to_string(kMaxVars) + " variables");
  }
  if (mask == 0) throw InputError("prime support must be nonempty");
  if (n < kMaxVars && (mask >> n) != 0) {
    throw InputError("prime support uses a variable beyond x" +
                     std::to_string(n));
  }
}

static std::uint64_t mask_from_vars(std::size_t n,
                                    std::span<const std::size_t> vars) {
  std::uint64_t mask = 0;
  for (std::size_t v : vars) {
    if (v == 0 || v > n || v > PrimeSupport::kMaxVars) {
      throw InputError("variable index " + std::to_string(v) +
                       " outside 1.." + std::to_string(n));
    }
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (mask & bit) {
      throw InputError("duplicate variable x" + std::to_string(v) +
                       " in prime support");
    }
    mask |= bit;
  }
  return mask;
}

PrimeSupport::PrimeSupport(std::size_t n, std::span<const std::size_t> vars)
    : PrimeSupport(n, mask_from_vars(n, vars)) {}

std::size_t PrimeSupport::size() const {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> PrimeSupport::vars() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
  }
  return out;
}

std::string PrimeSupport::to_string() const {
  std::string out = "(";
  bool first = true;
  for (std::size_t v : vars()) {
    if (!first) out += ',';
    first = false;
    out += 'x' + std::to_string(v);
  }
  return out + ')';
}

bool canonical_less(const PrimeSupport& a, const PrimeSupport& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto va = a.vars();
  const auto vb = b.vars();
  return va < vb;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return minimalize({Monomial(n)}, n);
}

MonomialIdeal MonomialIdeal::from_prime(const PrimeSupport& p) {
  std::vector<Monomial> gens;
  for (std::size_t v : p.vars()) {
    gens.push_back(Monomial::variable(p.num_vars(), v));
  }
  return minimalize(std::move(gens), p.num_vars());
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  return os << '(' << ideal.to_string() << ')';
}

MonomialIdeal minimalize(std::vector<Monomial> raw, std::size_t n) {
  for (const auto& m : raw) {
    if (m.num_vars() != n) {
      throw InputError("monomial " + m.to_string() + " has " +
                       std::to_string(m.num_vars()) +
                       " variables, expected " + std::to_string(n));
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const Monomial& a, const Monomial& b) {
              return canonical_less(a, b);
            });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // A divisor has no larger degree, so it precedes its multiples. Support
  // masks reject most non-divisors before the exponent scan.
  const bool use_masks = n <= 64;
  std::vector<std::uint64_t> kept_masks;
  MonomialIdeal out(n);
  for (auto& m : raw) {
    const std::uint64_t mask = use_masks ? m.support_mask() : 0;
    bool redundant = false;
    for (std::size_t i = 0; i < out.gens_.size(); ++i) {
      if (use_masks && (kept_masks[i] & ~mask) != 0) continue;
      if (out.gens_[i].divides(m)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    if (use_masks) kept_masks.push_back(mask);
    out.gens_.push_back(std::move(m));
  }
  return out;
}

static void check_same_ring(const MonomialIdeal& a, std::size_t n) {
  if (a.num_vars() != n) {
    throw InputError("ideal lives in " + std::to_string(a.num_vars()) +
                     " variables, expected " + std::to_string(n));
  }
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  check_same_ring(ideal, m.num_vars());
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  check_same_ring(ideal, f.num_vars());
  std::vector<Monomial> raw;
  raw.reserve(ideal.size());
  for (const auto& g : ideal.gens()) raw.push_back(g.colon(f));
  return minimalize(std::move(raw), ideal.num_vars());
}

MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& f) {
  check_same_ring(ideal, f.num_vars());
  std::vector<Monomial> raw(ideal.gens().begin(), ideal.gens().end());
  raw.push_back(f);
  return minimalize(std::move(raw), ideal.num_vars());
}

namespace {

void check_generator_cap(std::size_t count, const Limits& limits,
                         const char* what) {
  if (count > limits.max_generators) {
    throw ResourceError(std::string(what) + " produced " +
                        std::to_string(count) +
                        " generators, above the cap of " +
                        std::to_string(limits.max_generators));
  }
}

template <typename Op>
MonomialIdeal pairwise(const MonomialIdeal& a, const MonomialIdeal& b,
                       const Limits& limits, const char* what, Op op) {
  check_same_ring(b, a.num_vars());
  const std::size_t pairs = a.size() * b.size();
  // Raw candidates are bounded separately so the pairwise table itself
  // cannot exhaust memory.
  check_generator_cap(pairs / 16, limits, what);
  std::vector<Monomial> raw;
  raw.reserve(pairs);
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) raw.push_back(op(g, h));
  }
  auto out = minimalize(std::move(raw), a.num_vars());
  check_generator_cap(out.size(), limits, what);
  return out;
}

}  // namespace

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b,
                       const Limits& limits) {
  return pairwise(a, b, limits, "multiply",
                  [](const Monomial& g, const Monomial& h) { return g * h; });
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned s,
                    const Limits& limits) {
  auto result = MonomialIdeal::unit(ideal.num_vars());
  for (unsigned i = 0; i < s; ++i) result = multiply(result, ideal, limits);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        const Limits& limits) {
  return pairwise(a, b, limits, "intersect",
                  [](const Monomial& g, const Monomial& h) {
                    return g.lcm(h);
                  });
}

MonomialIdeal prime_power(const PrimeSupport& p, unsigned s) {
  if (s == 0) throw InputError("prime_power needs s >= 1");
  const std::size_t n = p.num_vars();
  const auto vars = p.vars();
  std::vector<Monomial> raw;
  // Enumerate compositions of s into vars.size() parts.
  std::vector<Exponent> parts(vars.size(), 0);
  auto emit = [&] {
    std::vector<Exponent> exps(n, 0);
    for (std::size_t i = 0; i < vars.size(); ++i) exps[vars[i] - 1] = parts[i];
    raw.emplace_back(std::move(exps));
  };
  auto rec = [&](auto&& self, std::size_t idx, unsigned left) -> void {
    if (idx + 1 == vars.size()) {
      parts[idx] = left;
      emit();
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      parts[idx] = e;
      self(self, idx + 1, left - e);
    }
  };
  rec(rec, 0, s);
  return minimalize(std::move(raw), n);
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned s,
                             std::span<const PrimeSupport> primes,
                             const Limits& limits) {
  if (primes.empty()) {
    throw InputError("symbolic_power needs at least one minimal prime");
  }
  auto result = MonomialIdeal::unit(ideal.num_vars());
  for (const auto& p : primes) {
    if (p.num_vars() != ideal.num_vars()) {
      throw InputError("prime " + p.to_string() + " lives in " +
                       std::to_string(p.num_vars()) + " variables, expected " +
                       std::to_string(ideal.num_vars()));
    }
    result = intersect(result, prime_power(p, s), limits);
  }
  return result;
}

}  // namespace sqmult
