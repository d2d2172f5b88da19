#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planeaut {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a mathematical operation failed (division by zero,
/// singular matrix, incompatible conductors, out-of-range parameter, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An enumeration (group closure, element order) exceeded its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

/// A claimed property (invariance of a form, a case of the classification)
/// does not hold for the given input.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace planeaut
