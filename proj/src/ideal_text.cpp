#include "sqmult/ideal_text.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <vector>

namespace sqmult {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : InputError("at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  // Each generator as a map from 1-based index to exponent.
  std::vector<std::map<std::size_t, Exponent>> generators() {
    std::vector<std::map<std::size_t, Exponent>> gens;
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty ideal text");
    while (true) {
      gens.push_back(generator());
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != ',') {
        throw ParseError(pos_, std::string("expected ',' or end of input, found '") +
                                   text_[pos_] + "'");
      }
      const std::size_t comma = pos_++;
      skip_space();
      if (at_end()) throw ParseError(comma, "dangling ','");
    }
    return gens;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  std::map<std::size_t, Exponent> generator() {
    std::map<std::size_t, Exponent> exps;
    factor(exps);
    while (true) {
      skip_space();
      if (at_end() || text_[pos_] != '*') return exps;
      const std::size_t star = pos_++;
      skip_space();
      if (at_end() || text_[pos_] != 'x') {
        throw ParseError(star, "dangling '*' without a following factor");
      }
      factor(exps);
    }
  }

  void factor(std::map<std::size_t, Exponent>& exps) {
    skip_space();
    if (at_end() || text_[pos_] != 'x') {
      throw ParseError(pos_, "expected a factor x<index>");
    }
    ++pos_;
    skip_space();
    const std::size_t index_at = pos_;
    const auto index = number("variable index");
    if (index == 0) throw ParseError(index_at, "variable indices start at 1");
    std::uint64_t exp = 1;
    skip_space();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const std::size_t exp_at = pos_;
      exp = number("exponent");
      if (exp == 0) throw ParseError(exp_at, "exponents must be at least 1");
    }
    auto& slot = exps[index];
    if (slot + exp > std::numeric_limits<Exponent>::max()) {
      throw ParseError(index_at, "exponent too large");
    }
    slot += static_cast<Exponent>(exp);
    max_index_ = std::max<std::size_t>(max_index_, index);
  }

  std::uint64_t number(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(pos_, std::string("expected ") + what);
    }
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<Exponent>::max()) {
        throw ParseError(start, std::string(what) + " too large");
      }
      ++pos_;
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text,
                          std::optional<std::size_t> n_override) {
  Parser parser(text);
  const auto gens = parser.generators();
  std::size_t n = parser.max_index();
  if (n_override) {
    if (*n_override < n) {
      throw InputError("--n " + std::to_string(*n_override) +
                       " is smaller than the largest variable index " +
                       std::to_string(n));
    }
    n = *n_override;
  }
  std::vector<Monomial> monos;
  monos.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<Exponent> exps(n, 0);
    for (const auto& [index, e] : g) exps[index - 1] = e;
    monos.emplace_back(std::move(exps));
  }
  return minimalize(std::move(monos), n);
}

std::string render_ideal(const MonomialIdeal& ideal) {
  return ideal.to_string();
}

}  // namespace sqmult
