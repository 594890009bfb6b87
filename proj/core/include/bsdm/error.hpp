#pragma once

#include <stdexcept>
#include <string>

namespace bsdm {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected inputs: bad arguments, malformed files, contract violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numeric breakdown at runtime: divergence, non-finite values,
/// failed factorizations.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace bsdm
