#pragma once

#include <stdexcept>
#include <string>

namespace misspec {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A likelihood row or the true DGP has a zero (or negative) entry.
struct ZeroLikelihood : Error {
  using Error::Error;
};

// A probability vector does not sum to one within the ingestion tolerance.
struct NotStochastic : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// An update with weight > 1 left the simplex and clamping was not requested.
struct OutOfSimplex : Error {
  using Error::Error;
};

// A noise supplier returned a point outside the simplex.
struct InvalidNoise : Error {
  using Error::Error;
};

struct InvalidSchedule : Error {
  using Error::Error;
};

// Face optimization exhausted its iteration budget.
struct NoConvergence : Error {
  using Error::Error;
};

// Two components' cross-entropy values are too close to identify the maximum.
struct AmbiguousMaximum : Error {
  using Error::Error;
};

struct NotSupported : Error {
  using Error::Error;
};

// An integration step left the simplex by more than the recoverable tolerance.
struct StepTooLarge : Error {
  using Error::Error;
};

struct InvalidConfig : Error {
  using Error::Error;
};

struct UnknownExample : Error {
  using Error::Error;
};

// Model-file syntax or schema problem.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace misspec
