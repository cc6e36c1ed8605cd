#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycirc {

/// Base class for every error the library reports through exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with arguments that violate its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded operation (enumeration, normal-subgroup scan, ...) would have to
/// exceed its configured element bound.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of applicable routes within its bounds. Distinct from a
/// definitive "no semiregular element exists" answer.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input. `line` and `column` are 1-based; byte-oriented
/// formats (graph6, sparse6) report line 1 and the byte offset as column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polycirc
