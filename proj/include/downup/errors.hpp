#pragma once

#include <stdexcept>
#include <string>

namespace downup {

/// Malformed or out-of-range user input (bad parameters, unknown generators,
/// zero polynomials where a nonzero one is required).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical hypothesis required by an operation does not hold,
/// e.g. asking for a solvable structure when lambda * omega == 0.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A certificate that must hold by construction failed. Carries the witness
/// in its message.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace downup
