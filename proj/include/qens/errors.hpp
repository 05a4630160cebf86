#pragma once

#include <stdexcept>

namespace qens {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix failed the density-matrix contract (Hermiticity, trace, positivity).
struct ValidityError : Error {
  using Error::Error;
};

// Operands with incompatible shapes or dimensions.
struct DimensionError : Error {
  using Error::Error;
};

// Parameter outside its mathematical domain (alpha <= 0, target mean
// outside the achievable interval, degenerate input, ...).
struct DomainError : Error {
  using Error::Error;
};

// A factorization or iteration failed to converge.
struct NumericalError : Error {
  using Error::Error;
};

// Malformed or unreadable input file.
struct IoError : Error {
  using Error::Error;
};

}  // namespace qens
