#pragma once

#include <stdexcept>
#include <string>

namespace qspec {

/// Bad argument: invalid rank, non-dominant weight, q outside (0,1), s <= 0, ...
/// The CLI maps it to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap was exceeded (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Remainder left by an exact Laurent division. Indicates a bug upstream,
/// since every quotient requested by this library is a polynomial.
class NonExactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A numerical estimate could not be formed (ratios never stabilized, a
/// zeta evaluation did not converge, ...).
class EstimationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qspec
