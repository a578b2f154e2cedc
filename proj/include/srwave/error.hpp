#pragma once

#include <stdexcept>
#include <string>

namespace srwave {

// Base for every error raised by the library. The CLI maps the concrete
// kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plane dimensions that violate an operation's precondition.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Malformed file header or magic.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Valid PNM, but a sample depth other than 8 bits.
class UnsupportedDepthError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Unreadable/unwritable path or truncated payload.
class IoError : public Error {
 public:
  using Error::Error;
};

// Out-of-range configuration value (kernel size, sigma, scale, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace srwave
