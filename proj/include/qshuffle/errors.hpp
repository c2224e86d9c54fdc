#pragma once

#include <stdexcept>
#include <string>

namespace qsh {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A run was configured with inconsistent or unsupported parameters.
struct ConfigError : Error {
  using Error::Error;
};

// Operand dimensions (rank, tuple length, permutation size) disagree.
struct SizeMismatch : Error {
  using Error::Error;
};

// An operation that requires a homogeneous element received a mixed one.
struct NonHomogeneousInput : Error {
  using Error::Error;
};

// Division by a zero (or non-invertible) scalar.
struct DivisionByZero : Error {
  using Error::Error;
};

// A combinatorial enumeration would exceed its configured guard.
struct EnumerationGuard : Error {
  using Error::Error;
};

// A matrix exceeds the configured dimension cap.
struct MatrixTooLarge : Error {
  using Error::Error;
};

// A graded operator was asked to act outside the computed degree window.
struct WindowExceeded : Error {
  using Error::Error;
};

// A map fails the refinement condition.
struct NotARefinement : Error {
  using Error::Error;
};

// Subset argument may not be empty.
struct EmptySubset : Error {
  using Error::Error;
};

}  // namespace qsh
