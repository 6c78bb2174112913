#pragma once

#include <stdexcept>
#include <string>

namespace entopt {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NotNormalizable : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct BasisNotUnitary : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct DegenerateBranch : Error {
  using Error::Error;
};
struct NotTraceless : Error {
  using Error::Error;
};
struct NotDensityMatrix : Error {
  using Error::Error;
};
struct NotStationary : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace entopt
