#pragma once

#include <stdexcept>
#include <string>

namespace addcollatz {

/// Precondition violated by the caller (bad arguments, unsupported domain).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// mod_inverse on a non-unit.
class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A value left the supported 63-bit width.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An iteration cap ran out before a verdict was reached.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something that the mathematics guarantees did not hold. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace addcollatz
