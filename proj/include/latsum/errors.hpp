#pragma once

#include <stdexcept>
#include <string>

namespace latsum {

/// Argument outside the mathematical domain of an operation (k outside (0,1),
/// Im(tau) <= 0, nonpositive Gamma argument, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole of a lattice function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction failed. Indicates a bug
/// upstream, never a user error.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace latsum
