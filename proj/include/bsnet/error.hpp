#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsnet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A network, expression or formula violates a structural invariant.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An exhaustive operation was refused because the input exceeds its cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An update schedule is not an ordered partition of the component set.
class ScheduleError : public Error {
 public:
  using Error::Error;
};

/// A rank or bit pattern does not encode an update schedule.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// A reduction was asked for with parameters outside its domain.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bsnet
