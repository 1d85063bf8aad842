#pragma once

#include <stdexcept>
#include <string>

namespace lamekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different field contexts and no embedding was applied.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A local expansion could not determine a valuation within the precision cap.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Random sampling exceeded its trial budget.
class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace lamekit
