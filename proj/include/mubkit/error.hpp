#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mubkit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatches: wrong coefficient counts, non-monic moduli, malformed strips.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Mathematically invalid inputs: composite p, order of zero, non-primitive generator.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A construction route was requested in a characteristic it does not handle.
class UnsupportedRouteError : public Error {
 public:
  using Error::Error;
};

// p^r or a dense allocation exceeds the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Invariant violated inside the library; indicates a bug or an unvalidated modulus.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column, std::size_t offset)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) +
              ", offset " + std::to_string(offset) + ")"),
        line_(line),
        column_(column),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::size_t offset_;
};

}  // namespace mubkit
