#pragma once

#include <stdexcept>
#include <string>

namespace ncpq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed quiver text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Arguments violate an operation's precondition (wrong length, bad index...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The operation needs a finite-type quiver.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

/// An enumeration grew past its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// An internal consistency certificate failed. Always a bug, never user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncpq
