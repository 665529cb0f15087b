#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ultk {

// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text. Offsets are 0-based, line/column 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Two values from incompatible ambients (different variables or field).
class AmbientMismatch : public Error {
public:
  explicit AmbientMismatch(const std::string& msg) : Error(msg) {}
};

// A computation hit its configured resource budget. Distinct from any
// mathematical failure: the answer is unknown, not wrong.
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Caller passed an argument outside an operation's contract.
class ArgError : public Error {
public:
  explicit ArgError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace ultk
