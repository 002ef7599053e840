#pragma once

#include <stdexcept>
#include <string>

namespace qk {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// A value is outside the domain an operation is defined on
// (nonzero imaginary part, depth overflow, bad epsilon, ...).
struct DomainError : Error {
  using Error::Error;
};

// An object violates a structural invariant (non-coherent prefix,
// non-idempotent projection matrix, invalid machine table, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Syntax error in one of the text file formats.
struct ParseError : Error {
  std::string file;
  int line = 0;
  int column = 0;

  ParseError(std::string file_, int line_, int column_, const std::string& what_)
      : Error(file_ + ":" + std::to_string(line_) + ":" + std::to_string(column_) +
              ": " + what_),
        file(std::move(file_)),
        line(line_),
        column(column_) {}
};

}  // namespace qk
