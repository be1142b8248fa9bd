#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

// Base for every error raised by the library. Verification failures are not
// errors; they are reported through Report objects.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by zero") {}
};

class FieldMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Operands live over different generator sets or Hopf algebras.
class AmbientMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class DegreeCapExceeded : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class Unsupported : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class InvalidArgument : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// An internal consistency check failed; indicates a bug or inconsistent input
// that slipped past validation.
class InternalAssertion : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Malformed text input; carries a 1-based source location.
class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : AlgebraError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

#define NAKAYAMA_ASSERT(cond, msg)                          \
  do {                                                      \
    if (!(cond)) throw ::nakayama::InternalAssertion(msg);  \
  } while (false)

}  // namespace nakayama
