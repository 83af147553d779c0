#pragma once

#include <stdexcept>
#include <string>

namespace knotslice {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Levine-Tristram signature requested at a root of the Alexander polynomial;
// the value there is convention-dependent, so the engine refuses.
struct SingularAtRoot : Error {
  using Error::Error;
};

// Certified eigenvalue signs could not be pinned down within the precision cap.
struct PrecisionExceeded : Error {
  using Error::Error;
};

struct ZeroPolynomial : Error {
  using Error::Error;
};

struct InexactDivision : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidSeifertMatrix : Error {
  using Error::Error;
};

struct InvalidIntersectionForm : Error {
  using Error::Error;
};

// Congruence of the characteristic case evaluated on an ordinary class.
struct NotCharacteristic : Error {
  using Error::Error;
};

// sigma(N) - x.x not divisible by 8 for a characteristic x: the inputs are
// inconsistent (the form cannot be unimodular).
struct NotDivisibleBy8 : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace knotslice
