#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sqmult/errors.hpp"
#include "sqmult/ideal.hpp"

namespace sqmult {

/// Syntax error in ideal text; offset is the byte position of the first
/// violation.
class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses "x1*x2, x2^3*x4". Generators are separated by ',', factors by '*',
/// and a factor is x<index> or x<index>^<exp> with 1-based index and
/// exponent >= 1. Whitespace is ignored. n is the largest index seen unless
/// n_override is given, which must be at least that large.
MonomialIdeal parse_ideal(std::string_view text,
                          std::optional<std::size_t> n_override = {});

/// Text form accepted by parse_ideal for any nonzero proper ideal.
std::string render_ideal(const MonomialIdeal& ideal);

}  // namespace sqmult
