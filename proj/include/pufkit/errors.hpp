#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pufkit {

/// Base class for all pufkit domain errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input. Carries the 1-based line/column of the offending
/// token in addition to the formatted message.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Malformed binary input (trace or helper-data files).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace pufkit
