#include "sqmult/commands.hpp"

#include <chrono>
#include <sstream>

#include "sqmult/closed_forms.hpp"
#include "sqmult/errors.hpp"
#include "sqmult/hilbert.hpp"
#include "sqmult/ideal_text.hpp"
#include "sqmult/path_cycles.hpp"

namespace sqmult {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

nlohmann::json big_or_null(const std::optional<BigInt>& v) {
  return v ? nlohmann::json(v->get_str()) : nlohmann::json(nullptr);
}

void check_modes(bool formula_only, bool engine_only, unsigned power) {
  if (formula_only && engine_only) {
    throw InputError("--formula-only and --engine-only are exclusive");
  }
  if (power < 1) throw InputError("--power must be at least 1");
}

}  // namespace

std::optional<bool> Report::match() const {
  if (!e0_formula || !e0_engine) return std::nullopt;
  return *e0_formula == *e0_engine;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["input"] = report.input;
  j["n"] = std::to_string(report.n);
  j["d"] = report.d ? nlohmann::json(std::to_string(*report.d))
                    : nlohmann::json(nullptr);
  j["mu"] = big_or_null(report.mu);
  j["s"] = std::to_string(report.s);
  j["e0_formula"] = big_or_null(report.e0_formula);
  j["e0_engine"] = big_or_null(report.e0_engine);
  const auto m = report.match();
  j["match"] = m ? nlohmann::json(*m) : nlohmann::json(nullptr);
  std::ostringstream ms;
  ms.precision(3);
  ms << std::fixed << report.ms;
  j["ms"] = ms.str();
  return j;
}

std::string to_text(const Report& report) {
  auto show = [](const auto& v) -> std::string {
    if (!v) return "-";
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, BigInt>) {
      return v->get_str();
    } else {
      return std::to_string(*v);
    }
  };
  std::ostringstream os;
  os << "input       " << report.input << '\n'
     << "n           " << report.n << '\n'
     << "d           " << show(report.d) << '\n'
     << "mu          " << show(report.mu) << '\n'
     << "s           " << report.s << '\n'
     << "e0 formula  " << show(report.e0_formula) << '\n'
     << "e0 engine   " << show(report.e0_engine) << '\n';
  const auto m = report.match();
  os << "match       " << (m ? (*m ? "yes" : "NO") : "-") << '\n';
  os.precision(3);
  os << "time        " << std::fixed << report.ms << " ms\n";
  return os.str();
}

Report cmd_mult(const MonomialIdeal& ideal, const MultOptions& options) {
  const auto start = Clock::now();
  check_modes(options.formula_only, options.engine_only, options.power);
  if (ideal.is_zero()) throw InputError("multiplicity of the zero ideal");
  if (ideal.is_unit()) throw InputError("multiplicity of the unit ideal");
  if (!options.engine_only && !ideal.is_squarefree()) {
    throw InputError(
        "the closed form needs a squarefree ideal; use --engine-only");
  }
  if (options.symbolic && !ideal.is_squarefree()) {
    throw InputError("symbolic powers are only built for squarefree ideals");
  }
  if (options.symbolic && options.formula_only) {
    throw InputError("--symbolic has no effect with --formula-only");
  }

  Report report;
  report.input = render_ideal(ideal);
  report.n = ideal.num_vars();
  report.s = options.power;

  std::optional<PrimeList> primes;
  if (ideal.is_squarefree()) {
    primes = minimal_primes(ideal);
    const auto profile = dim_profile(*primes);
    report.d = profile.d;
    report.mu = to_big(profile.mu);
    if (!options.engine_only) {
      report.e0_formula =
          e0_power_formula(report.n, profile.d, *report.mu, options.power);
    }
  }

  if (!options.formula_only) {
    const auto target =
        options.symbolic
            ? symbolic_power(ideal, options.power, primes->primes,
                             options.limits)
            : power(ideal, options.power, options.limits);
    const auto series = series_profile(target, options.limits);
    report.e0_engine = series.e0;
    if (!report.d) report.d = series.d;
  }
  report.ms = elapsed_ms(start);
  return report;
}

Report cmd_cycle(std::size_t n, std::size_t d, const CycleOptions& options) {
  const auto start = Clock::now();
  check_modes(options.formula_only, options.engine_only, options.power);
  const CycleIdealSpec spec(n, d);
  const auto ideal = cycle_path_ideal(spec);

  Report report;
  report.input = render_ideal(ideal);
  report.n = n;
  report.s = options.power;
  report.d = dim_cycle(spec);
  report.mu = e0_cycle(n, d);
  if (!options.engine_only) {
    report.e0_formula = e0_cycle_power(n, d, options.power);
  }
  if (!options.formula_only) {
    const auto series =
        series_profile(power(ideal, options.power, options.limits),
                       options.limits);
    report.e0_engine = series.e0;
    if (series.d != *report.d) {
      throw InvariantError("engine dimension " + std::to_string(series.d) +
                           " differs from n - ceil(n/d) = " +
                           std::to_string(*report.d));
    }
  }
  report.ms = elapsed_ms(start);
  return report;
}

nlohmann::json to_json(const PrimeList& primes) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& p : primes.primes) list.push_back(p.vars());
  return {{"n", std::to_string(primes.n)}, {"primes", list}};
}

}  // namespace sqmult
