#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: polynomial syntax, germ-spec files, CLI arguments.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(what), position_(position), line_(line) {}
  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

/// Arguments violate an operation's preconditions (ring mismatch, arity, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The mathematics refuses the request: a non-principal elimination ideal, an
/// infinite quotient where a finite one is required, and similar.
class MathRefusal : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace germforge
