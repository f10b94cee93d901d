#pragma once

#include <stdexcept>
#include <string>

namespace exactfn {

/// Malformed input: width or space mismatches, unparsable rationals, domains
/// that are not lattices, missing events, and the like.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for otherwise
/// well-formed input (for example natural extension of an assessment that
/// incurs sure loss).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// lattice_closure exceeded its element budget.
class ClosureOverflow : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace exactfn
