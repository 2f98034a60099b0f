#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hecke {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live in incompatible fields (e.g. Q(q) mixed with Q(e)).
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A constructor-time relation check (Hecke or braid) failed.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

class NoTopComponent : public Error {
 public:
  using Error::Error;
};

class DegeneratePairing : public Error {
 public:
  using Error::Error;
};

/// A linear system that must have a unique solution did not.
class InconsistentSolve : public Error {
 public:
  using Error::Error;
};

/// [n-1]!_q vanishes, so the normalized functional f does not exist.
class QFactorialVanishes : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hecke
