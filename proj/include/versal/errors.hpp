#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace versal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or input file. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class RingMismatchError : public Error {
 public:
  RingMismatchError() : Error("operands belong to different rings") {}
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Precondition of a computation not met (inhomogeneous input, infinite
/// dimensional quotient, non-positive grading, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A lift that theory says must exist could not be found.
class LiftError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace versal
