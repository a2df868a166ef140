#pragma once

#include <stdexcept>
#include <string>

namespace abel_center {

/// Malformed user input (bad JSON, bad rational literal, violated precondition
/// on user-supplied data).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Seeing one of these means a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a series is not divisible by the requested power of y.
class DivisibilityError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// Brudnyi coefficients and the first-integral series disagree.
class OracleMismatch : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class InvalidEquation : public InputError {
 public:
  using InputError::InputError;
};

class InvalidBase : public InputError {
 public:
  using InputError::InputError;
};

/// The second Melnikov function was requested without a certificate that
/// the first one vanishes.
class M1NotZero : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedOrder : public InputError {
 public:
  using InputError::InputError;
};

/// The numeric solution escaped the blow-up bound before reaching the end of
/// the interval. This is a legitimate outcome for Abel equations.
class BlowUp : public std::runtime_error {
 public:
  explicit BlowUp(double where)
      : std::runtime_error("solution blew up near x = " + std::to_string(where)),
        location(where) {}
  double location;
};

/// The integrator exhausted its step budget before reaching the endpoint.
class StepLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abel_center
