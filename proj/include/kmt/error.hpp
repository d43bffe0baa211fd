#pragma once

#include <stdexcept>
#include <string>

namespace kmt {

/// Base of every error raised by the toolkit. Input errors (malformed files,
/// violated preconditions) and internal consistency failures both derive
/// from it; the CLI maps the former to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract user input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that failed to parse; carries 1-based line/column of the offending token.
class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A mathematical fact the code relies on did not hold. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace kmt
