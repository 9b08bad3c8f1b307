#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bolpq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate a documented precondition (non-prime p, q >= p, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// q does not divide p^2 - 1, so F_{p^2} has no primitive q-th root of unity.
class NoRootError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A gamma outside the admissible set produced a vanishing denominator.
class DegenerateGamma : public Error {
 public:
  using Error::Error;
};

/// A theta vector that cannot be fed to the loop construction.
class InadmissibleTheta : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds a configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bolpq
