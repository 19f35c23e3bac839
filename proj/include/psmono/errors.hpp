#pragma once

#include <stdexcept>
#include <string>

namespace psmono {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in different algebras or have mismatched arity.
struct DimensionError : Error {
  using Error::Error;
};

/// A value outside an operation's admissible set (non-unit omega, bad index, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Division by zero, evaluation at a pole, non-invertible group element.
struct SingularityError : Error {
  using Error::Error;
};

/// Quadrature evaluation point too close to the integration surface.
struct ConditioningError : Error {
  using Error::Error;
};

}  // namespace psmono
