#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text. `offset` is the 1-based byte offset for expression input;
/// documents additionally carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0,
             std::size_t column = 0)
      : Error(what), offset_(offset), line_(line), column_(column) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class MalformedPresentation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class NonInvertibleSubstitution : public Error {
 public:
  using Error::Error;
};

class CompositionWithUnit : public Error {
 public:
  using Error::Error;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class NotAComplex : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check disagreed (exit code 3 at the CLI).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tk
