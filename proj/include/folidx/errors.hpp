#pragma once

#include <stdexcept>
#include <string>

namespace folidx {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lens-space rotation data with gcd(m,p) != 1 or gcd(n,p) != 1, or p < 2.
struct InvalidLensDatum : Error {
  using Error::Error;
};

// A graded action whose generator does not satisfy g^order = identity.
struct RelationViolation : Error {
  using Error::Error;
};

// Character averaging produced something that is not a nonnegative integer;
// the action/character pair is inconsistent.
struct NonIntegralMultiplicity : Error {
  using Error::Error;
};

// Flat circle bundle with multiplier <= 0.
struct NonpositiveHolonomy : Error {
  using Error::Error;
};

// Representation-valued assembly requested without a usable rho table.
struct MissingRhoTable : Error {
  using Error::Error;
};

// Blowup defect check requested without the original p1 integral.
struct MissingOriginalIntegral : Error {
  using Error::Error;
};

// Input text is not valid JSON (or not a valid rational literal).
struct ParseError : Error {
  using Error::Error;
};

// JSON is well formed but does not match the example schema.
struct SchemaError : Error {
  using Error::Error;
};

// A structurally valid value violates a domain invariant.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace folidx
