#pragma once

#include <stdexcept>
#include <string>

namespace symalg {

// Bad user input: malformed group data, non-prime characteristic, bad flags.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Always an implementation bug.
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The working field is too small to split the algebra; callers may retry
// over a larger extension.
class SplitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symalg
