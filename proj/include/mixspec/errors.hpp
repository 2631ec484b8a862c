#pragma once

#include <stdexcept>
#include <string>

namespace mixspec {

/// Malformed input: bad edge lists, bad arguments, size mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation does not apply to this graph (failed hypothesis).
class Inapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive work refused because the graph is larger than the enumeration cap.
class CapExceeded : public Inapplicable {
 public:
  using Inapplicable::Inapplicable;
};

}  // namespace mixspec
