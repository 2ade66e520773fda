#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-square matrix, n < 2, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A matrix with zero determinant was given where an invertible one is needed.
class SingularMatrix : public DomainError {
public:
  SingularMatrix() : DomainError("matrix is singular (determinant is zero)") {}
  explicit SingularMatrix(const std::string& what) : DomainError(what) {}
};

/// A theorem hypothesis required by a builder or test was not met.
class HypothesisError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A size guard was exceeded.
class BoundError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return "parse error: " + msg;
    if (line == 0) return "parse error at column " + std::to_string(column) + ": " + msg;
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace cosov
