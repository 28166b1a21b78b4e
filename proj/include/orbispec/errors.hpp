#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbispec {

/// Arithmetic between elements of rings with different grading groups.
class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A recursive invariant was requested deeper than the model provides.
class DepthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request outside the declared support envelope (d > 0 with k >= 2, size bounds).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input; carries a 1-based source position when known.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace orbispec
