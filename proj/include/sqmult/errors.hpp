#pragma once

#include <stdexcept>
#include <string>

namespace sqmult {

/// Malformed or out-of-contract input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable resource cap (generator count, recursion nodes,
/// enumeration size) was exceeded. Maps to CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Never expected; indicates a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqmult
