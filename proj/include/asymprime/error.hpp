#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asymprime {

/// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings of different dimension, or a multi-index has the
/// wrong length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the range of the fixed-width exponent type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An experiment or filtration violates a precondition (axiom (ii), ring too
/// large for the associated-prime engine, zero saturating ideal, ...).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Something the library promises to hold did not.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Lexical, syntactic, or binding error in DSL source. Lines and columns are
/// 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

}  // namespace asymprime
