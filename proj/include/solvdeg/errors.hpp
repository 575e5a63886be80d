#pragma once

#include <stdexcept>
#include <string>

namespace solvdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent tuples or rings of mismatched length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An invariant (dregF, unique solution, ...) is not defined for the input.
class UndefinedInvariant : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The Macaulay loop reached its degree cap without finding a Groebner basis.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int cap)
      : Error("degree cap " + std::to_string(cap) + " exceeded before a Groebner basis was found"),
        cap_(cap) {}
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

/// Internal consistency failure; indicates a bug rather than bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind { Syntax, UnknownVariable, NonPrimeModulus, EmptySystem, MissingHeader, ZeroGenerator };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

}  // namespace solvdeg
