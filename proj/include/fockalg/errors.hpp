#pragma once

#include <stdexcept>
#include <string>

namespace fockalg {

/// Thrown when a requested basis or word list would exceed the configured cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands built for different (n, N) or of incompatible shape.
class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical hypothesis of an operation does not hold for the input
/// (non-contraction, nonzero constant term, modulus constraint, ...).
class HypothesisViolation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace fockalg
