#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfforge {

// Base of every error the library raises for bad input or violated
// preconditions. Failed mathematical checks are reported as values, never
// thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// A computation needed words longer than the rewrite system's degree bound.
class DegreeOverflow : public Error {
 public:
  DegreeOverflow(std::size_t required, std::size_t bound)
      : Error("degree overflow: computation needs degree bound "
              + std::to_string(required) + ", have "
              + std::to_string(bound)),
        required_(required),
        bound_(bound) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t required_;
  std::size_t bound_;
};

class ParseError : public Error {
 public:
  ParseError(std::string message,
             std::size_t line,
             std::size_t column,
             std::vector<std::string> expected = {})
      : Error(format(message, line, column, expected)),
        message_(std::move(message)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  const std::string& bare_message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

  // Same error, relocated to a line of an enclosing file.
  ParseError at_line(std::size_t line, std::size_t column_offset = 0) const {
    return ParseError(message_, line, column_ + column_offset, expected_);
  }

 private:
  static std::string format(const std::string& message,
                            std::size_t line,
                            std::size_t column,
                            const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column)
                      + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) {
          out += ", ";
        }
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace hopfforge
