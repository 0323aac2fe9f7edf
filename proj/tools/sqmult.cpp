// sqmult: multiplicities of powers of squarefree monomial ideals.
//
// Exit codes: 0 success, 1 mismatch, 2 input error, 3 resource cap.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sqmult/closed_forms.hpp"
#include "sqmult/commands.hpp"
#include "sqmult/errors.hpp"
#include "sqmult/hilbert.hpp"
#include "sqmult/ideal_text.hpp"
#include "sqmult/path_cycles.hpp"
#include "sqmult/primes.hpp"
#include "sqmult/verify.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

constexpr const char* kCapEnv = "SQMULT_NODE_CAP";

struct IdealArgs {
  std::string text;
  std::string file;
  std::optional<std::size_t> n;
};

void add_ideal_args(CLI::App* cmd, IdealArgs& args) {
  cmd->add_option("ideal", args.text,
                  "generators, e.g. \"x1*x2, x2*x3\" (or use --file)");
  cmd->add_option("--file", args.file, "read the ideal from a file");
  cmd->add_option("--n", args.n, "variable count (default: largest index)");
}

sqmult::MonomialIdeal load_ideal(const IdealArgs& args) {
  std::string text = args.text;
  if (!args.file.empty()) {
    if (!text.empty()) {
      throw sqmult::InputError("give the ideal either inline or via --file");
    }
    std::ifstream in(args.file);
    if (!in) throw sqmult::InputError("cannot read " + args.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) throw sqmult::InputError("no ideal given");
  return sqmult::parse_ideal(text, args.n);
}

std::uint64_t default_node_cap() {
  if (const char* env = std::getenv(kCapEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw sqmult::InputError(std::string(kCapEnv) + " is not a number: " +
                               env);
    }
  }
  return sqmult::Limits{}.max_nodes;
}

void emit(const sqmult::Report& report, bool json) {
  if (json) {
    std::cout << sqmult::to_json(report).dump() << '\n';
  } else {
    std::cout << sqmult::to_text(report);
  }
}

int report_status(const sqmult::Report& report) {
  const auto m = report.match();
  return m && !*m ? kExitMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicities of powers of squarefree monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::uint64_t cap = 0;
  app.add_flag("--json", json, "emit JSON lines");
  app.add_option("--cap", cap,
                 std::string("recursion node cap (default from ") + kCapEnv +
                     " or 10000000)");

  // mult
  IdealArgs mult_ideal;
  sqmult::MultOptions mult;
  auto* mult_cmd =
      app.add_subcommand("mult", "e0(S/I^s): closed form vs Hilbert engine");
  add_ideal_args(mult_cmd, mult_ideal);
  mult_cmd->add_option("--power,-s", mult.power, "power s (default 1)");
  mult_cmd->add_flag("--symbolic", mult.symbolic, "use the symbolic power");
  mult_cmd->add_flag("--formula-only", mult.formula_only, "skip the engine");
  mult_cmd->add_flag("--engine-only", mult.engine_only,
                     "skip the closed form (any monomial ideal)");

  // cycle
  std::size_t cycle_n = 0;
  std::size_t cycle_d = 0;
  bool list_primes = false;
  sqmult::CycleOptions cycle;
  auto* cycle_cmd =
      app.add_subcommand("cycle", "e0(S/I_{n,d}^s) for d-path ideals of cycles");
  cycle_cmd->add_option("--n", cycle_n, "cycle length")->required();
  cycle_cmd->add_option("--d", cycle_d, "path length")->required();
  cycle_cmd->add_option("--power,-s", cycle.power, "power s (default 1)");
  cycle_cmd->add_flag("--formula-only", cycle.formula_only, "skip the engine");
  cycle_cmd->add_flag("--engine-only", cycle.engine_only,
                      "skip the closed form");
  cycle_cmd->add_flag("--list-primes", list_primes,
                      "also print the associated primes");

  // assprimes
  IdealArgs ass_ideal;
  std::size_t ass_cycle_d = 0;
  auto* ass_cmd = app.add_subcommand(
      "assprimes", "associated primes of a squarefree ideal or of I_{n,d}");
  add_ideal_args(ass_cmd, ass_ideal);
  ass_cmd->add_option("--cycle-d", ass_cycle_d,
                      "use I_{n,d} with this d (n from --n)");

  // dim
  IdealArgs dim_ideal;
  auto* dim_cmd = app.add_subcommand("dim", "dimension and mu of S/I");
  add_ideal_args(dim_cmd, dim_ideal);

  // hilbert
  IdealArgs hilb_ideal;
  std::optional<std::uint64_t> degree;
  std::vector<std::uint64_t> window;
  bool brute = false;
  auto* hilb_cmd = app.add_subcommand(
      "hilbert", "Hilbert series numerator, dimension, e0 and H(a)");
  add_ideal_args(hilb_cmd, hilb_ideal);
  hilb_cmd->add_option("--degree,-a", degree, "evaluate H(a)");
  hilb_cmd->add_option("--window", window, "evaluate H on [lo, hi]")
      ->expected(2);
  hilb_cmd->add_flag("--brute-force", brute,
                     "also count H(a) by monomial enumeration");

  // verify
  sqmult::VerifyConfig verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the verification sweep");
  verify_cmd->add_option("--max-n", verify.max_n,
                         "variables in random ideals (default 6)");
  verify_cmd->add_option("--max-d", verify.max_d,
                         "largest path length in cycle sweeps (0 = any)");
  verify_cmd->add_option("--max-s", verify.max_s,
                         "largest power in random sweeps (default 3)");
  verify_cmd->add_option("--samples", verify.samples,
                         "random ideals (default 200)");
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  verify_cmd->add_option("--threads", verify.threads,
                         "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    sqmult::Limits limits;
    limits.max_nodes = cap != 0 ? cap : default_node_cap();

    if (*mult_cmd) {
      mult.limits = limits;
      const auto report = sqmult::cmd_mult(load_ideal(mult_ideal), mult);
      emit(report, json);
      return report_status(report);
    }

    if (*cycle_cmd) {
      cycle.limits = limits;
      const auto report = sqmult::cmd_cycle(cycle_n, cycle_d, cycle);
      emit(report, json);
      if (list_primes) {
        const auto primes = sqmult::enumerate_assoc_primes_cycle(
            sqmult::CycleIdealSpec(cycle_n, cycle_d));
        if (json) {
          std::cout << sqmult::to_json(primes).dump() << '\n';
        } else {
          for (const auto& p : primes.primes) std::cout << p.to_string() << '\n';
        }
      }
      return report_status(report);
    }

    if (*ass_cmd) {
      sqmult::PrimeList primes;
      if (ass_cycle_d != 0) {
        if (!ass_ideal.n) throw sqmult::InputError("--cycle-d needs --n");
        primes = sqmult::enumerate_assoc_primes_cycle(
            sqmult::CycleIdealSpec(*ass_ideal.n, ass_cycle_d));
      } else {
        primes = sqmult::minimal_primes(load_ideal(ass_ideal));
      }
      if (json) {
        std::cout << sqmult::to_json(primes).dump() << '\n';
      } else {
        for (const auto& p : primes.primes) std::cout << p.to_string() << '\n';
      }
      return 0;
    }

    if (*dim_cmd) {
      const auto ideal = load_ideal(dim_ideal);
      const auto series = sqmult::series_profile(ideal, limits);
      std::optional<sqmult::DimProfile> profile;
      if (ideal.is_squarefree()) profile = sqmult::dim_profile(ideal);
      if (json) {
        nlohmann::json j;
        j["input"] = sqmult::render_ideal(ideal);
        j["n"] = std::to_string(ideal.num_vars());
        j["d"] = std::to_string(series.d);
        j["mu"] = profile ? nlohmann::json(std::to_string(profile->mu))
                          : nlohmann::json(nullptr);
        j["height"] = std::to_string(ideal.num_vars() - series.d);
        j["e0"] = series.e0.get_str();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "n       " << ideal.num_vars() << '\n'
                  << "d       " << series.d << '\n'
                  << "height  " << ideal.num_vars() - series.d << '\n'
                  << "mu      " << (profile ? std::to_string(profile->mu) : "-")
                  << '\n'
                  << "e0      " << series.e0.get_str() << '\n';
      }
      if (profile && profile->d != series.d) {
        std::cerr << "dimension mismatch: primes give " << profile->d
                  << ", Hilbert series gives " << series.d << '\n';
        return kExitMismatch;
      }
      return 0;
    }

    if (*hilb_cmd) {
      const auto ideal = load_ideal(hilb_ideal);
      const auto series = sqmult::series_profile(ideal, limits);
      std::vector<std::pair<std::uint64_t, sqmult::BigInt>> values;
      if (degree) {
        values.emplace_back(*degree, sqmult::hilbert_function(
                                         series.numerator, ideal.num_vars(),
                                         *degree));
      }
      if (!window.empty()) {
        const auto h = sqmult::hilbert_polynomial_window(ideal, window[0],
                                                         window[1], limits);
        for (std::size_t i = 0; i < h.size(); ++i) {
          values.emplace_back(window[0] + i, h[i]);
        }
      }
      int status = 0;
      std::vector<std::optional<std::uint64_t>> brute_values;
      for (const auto& [a, h] : values) {
        if (!brute) {
          brute_values.emplace_back();
          continue;
        }
        const auto b = sqmult::brute_force_hilbert_function(ideal, a, limits);
        brute_values.emplace_back(b);
        if (sqmult::to_big(b) != h) status = kExitMismatch;
      }
      if (json) {
        nlohmann::json j;
        j["input"] = sqmult::render_ideal(ideal);
        j["n"] = std::to_string(ideal.num_vars());
        j["numerator"] = nlohmann::json::array();
        for (const auto& c : series.numerator.coefficients()) {
          j["numerator"].push_back(c.get_str());
        }
        j["d"] = std::to_string(series.d);
        j["e0"] = series.e0.get_str();
        j["values"] = nlohmann::json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
          nlohmann::json v = {{"a", std::to_string(values[i].first)},
                              {"h", values[i].second.get_str()}};
          if (brute_values[i]) v["brute"] = std::to_string(*brute_values[i]);
          j["values"].push_back(v);
        }
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "numerator  " << series.numerator << '\n'
                  << "d          " << series.d << '\n'
                  << "e0         " << series.e0.get_str() << '\n';
        for (std::size_t i = 0; i < values.size(); ++i) {
          std::cout << "H(" << values[i].first
                    << ") = " << values[i].second.get_str();
          if (brute_values[i]) std::cout << "  brute " << *brute_values[i];
          std::cout << '\n';
        }
      }
      return status;
    }

    if (*verify_cmd) {
      verify.limits = limits;
      const auto summary = sqmult::run_verification(verify);
      if (json) {
        for (const auto& c : summary.criteria) {
          nlohmann::json j = {{"criterion", std::to_string(c.id)},
                              {"name", c.name},
                              {"cases", std::to_string(c.cases)},
                              {"passed", std::to_string(c.passed)},
                              {"capped", std::to_string(c.capped)},
                              {"failures", c.failures},
                              {"ok", c.ok}};
          std::cout << j.dump() << '\n';
        }
      } else {
        std::cout << sqmult::format_summary(summary);
      }
      return summary.ok() ? 0 : kExitMismatch;
    }
  } catch (const sqmult::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const sqmult::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return 0;
}
