#pragma once

#include <stdexcept>
#include <string>

namespace hsp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes do not agree (matrix sizes, vector lengths, face dimension).
struct DimensionError : Error {
  using Error::Error;
};

// Input data violates the homogeneous-space schema.  `pointer` is a JSON
// pointer to the offending field, empty when the error is not field-local.
struct ValidationError : Error {
  ValidationError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), pointer(std::move(where)) {}
  std::string pointer;
};

// A computation hit a degenerate configuration it cannot resolve
// (zero polynomial, non-isolated solutions, polytope of the wrong dimension).
struct DegenerateError : Error {
  using Error::Error;
};

struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace hsp
