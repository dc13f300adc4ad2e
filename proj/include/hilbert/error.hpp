#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbert {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested generation (or prefix length) exceeds the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A walk stepped outside the non-negative quadrant.
class NegativeCoordinateError : public Error {
 public:
  using Error::Error;
};

class NonFunctionalTransducerError : public Error {
 public:
  using Error::Error;
};

/// Semigroup exploration produced more distinct states than allowed.
class StateBudgetExceededError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class NoAcceptingPathError : public Error {
 public:
  using Error::Error;
};

class MultipleAcceptingPathsError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hilbert
