#pragma once

#include <stdexcept>
#include <string>

namespace zf {

// Malformed input: bad edge lists, family or function specs, out-of-range
// vertices. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size limit was exceeded (exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on arguments that violate its precondition,
// e.g. propagation time of a set that does not force.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zf
