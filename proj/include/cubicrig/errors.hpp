#pragma once

#include <stdexcept>
#include <string>

namespace cubicrig {

/// Operands live in different coefficient rings (e.g. F_3 vs F_5).
class RingMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPrimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured size limit (iterate count, matrix size,
/// enumeration budget).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division that was required to be exact left a remainder.
class InexactDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is degenerate for the requested operation (zero polynomial,
/// constant-in-x Sylvester input, ...).
class DegeneracyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Interpolated determinant has a non-integral coefficient, so the supplied
/// degree bound was too small.
class BoundViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubicrig
