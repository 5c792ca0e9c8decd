#pragma once

#include <stdexcept>
#include <string>

namespace statelab {

// Every failure raised by the library derives from Error; the C API maps
// each subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller input: unknown letters, missing truth assignments, bad
// arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// Text that does not conform to the interchange grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// A gallery language, experiment or other named reference that does not exist.
class UnknownReference : public InputError {
 public:
  using InputError::InputError;
};

// The automaton itself is ill-formed (e.g. delta undefined where reached).
class ModelError : public Error {
 public:
  using Error::Error;
};

// An operation that requires a particular automaton kind met another.
class KindError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// A configurable resource cap (membership queries, states) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace statelab
