#pragma once

#include <stdexcept>
#include <string>

namespace zipfsignal {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration: missing files, invalid flags, malformed schedules.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bad data: parse failures, I/O failures, constraint violations in inputs.
class DataError : public Error {
 public:
  using Error::Error;
};

// Numeric-domain failures: insufficient points, non-positive values where
// a logarithm or geometric mean is required, degenerate variance.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace zipfsignal
