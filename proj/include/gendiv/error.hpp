#pragma once

#include <stdexcept>
#include <string>

namespace gendiv {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input data: bad curve description, precondition violations,
// operations that are mathematically undefined for the given arguments.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Operation that is not defined at all (e.g. the sum of two omega-divisors).
struct UnsupportedError : ValidationError {
  explicit UnsupportedError(const std::string& msg) : ValidationError(msg) {}
};

// Malformed textual input: curve files, divisor expressions.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace gendiv
