#include "sqmult/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "sqmult/errors.hpp"

namespace sqmult {

BigInt binomial(std::uint64_t a, std::int64_t b) {
  if (b < 0 || static_cast<std::uint64_t>(b) > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), a, static_cast<std::uint64_t>(b));
  return out;
}

BigInt e0_power_formula(std::uint64_t n, std::uint64_t d, const BigInt& mu,
                        std::uint64_t s) {
  if (d >= n) {
    throw InputError("need d < n, got d = " + std::to_string(d) +
                     ", n = " + std::to_string(n));
  }
  if (mu < 1) throw InputError("need mu >= 1, got " + mu.get_str());
  if (s < 1) throw InputError("need s >= 1");
  return mu * binomial(n - d + s - 1, static_cast<std::int64_t>(s - 1));
}

CycleParams cycle_params(std::uint64_t n, std::uint64_t d) {
  if (d < 2 || n <= d) {
    throw InputError("cycle path ideals need n > d >= 2, got n = " +
                     std::to_string(n) + ", d = " + std::to_string(d));
  }
  // r = d when d | n.
  const std::uint64_t k = (n - 1) / d;
  return {n, d, k, n - k * d};
}

BigInt e0_cycle(std::uint64_t n, std::uint64_t d) {
  const auto p = cycle_params(n, d);
  const std::uint64_t top = p.k + p.d - p.r;
  const auto k = static_cast<std::int64_t>(p.k);
  return to_big(p.d) * binomial(top, k) - binomial(top, k + 1);
}

BigInt e0_cycle_power(std::uint64_t n, std::uint64_t d, std::uint64_t s) {
  if (s < 1) throw InputError("need s >= 1");
  const auto p = cycle_params(n, d);
  return e0_cycle(n, d) *
         binomial(p.k + s, static_cast<std::int64_t>(s - 1));
}

namespace {

// All tuples of the given length with entries in [lo, hi] summing to total.
std::vector<Tuple> bounded_compositions(std::size_t length, std::uint64_t lo,
                                        std::uint64_t hi,
                                        std::uint64_t total) {
  std::vector<Tuple> out;
  if (length == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  Tuple cur(length, 0);
  auto rec = [&](auto&& self, std::size_t idx, std::uint64_t left) -> void {
    const std::uint64_t rest = length - idx - 1;
    if (rest == 0) {
      if (left >= lo && left <= hi) {
        cur[idx] = left;
        out.push_back(cur);
      }
      return;
    }
    for (std::uint64_t v = lo; v <= hi && v <= left; ++v) {
      const std::uint64_t remain = left - v;
      if (remain < rest * lo || remain > rest * hi) continue;
      cur[idx] = v;
      self(self, idx + 1, remain);
    }
  };
  rec(rec, 0, total);
  return out;
}

void check_kdr(std::uint64_t k, std::uint64_t d, std::uint64_t r) {
  if (k < 1) throw InputError("need k >= 1");
  if (r < 1 || r > d) {
    throw InputError("need 1 <= r <= d, got r = " + std::to_string(r) +
                     ", d = " + std::to_string(d));
  }
}

}  // namespace

std::vector<Tuple> enumerate_U(std::uint64_t k, std::uint64_t d) {
  return bounded_compositions(k + 1, 0, d, k * d);
}

BigInt count_U(std::uint64_t k, std::uint64_t d) {
  return binomial(d + k, static_cast<std::int64_t>(d));
}

std::vector<Tuple> enumerate_W(std::uint64_t k, std::uint64_t d,
                               std::uint64_t r, std::uint64_t s) {
  check_kdr(k, d, r);
  if (s > d - r) {
    throw InputError("need s <= d - r, got s = " + std::to_string(s));
  }
  return bounded_compositions(k, 0, d, (k - 1) * d + r + s);
}

std::vector<Tuple> enumerate_V(std::uint64_t k, std::uint64_t d,
                               std::uint64_t r) {
  check_kdr(k, d, r);
  const std::uint64_t n = k * d + r;
  std::vector<Tuple> out;
  for (std::uint64_t sum = (k - 1) * d + r; sum < n; ++sum) {
    for (auto& b : bounded_compositions(k, 1, d, sum)) {
      for (std::uint64_t a1 = 1; a1 + sum <= n; ++a1) {
        Tuple t{a1};
        t.insert(t.end(), b.begin(), b.end());
        out.push_back(std::move(t));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt weighted_W_sum(std::uint64_t k, std::uint64_t d, std::uint64_t r) {
  check_kdr(k, d, r);
  BigInt total = 0;
  for (std::uint64_t s = 0; s <= d - r; ++s) {
    total += to_big(d - s) *
             to_big(enumerate_W(k, d, r, s).size());
  }
  return total;
}

}  // namespace sqmult
