#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace choicekit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Finite degree or optionality arithmetic left the 64-bit range.
class ArithmeticOverflow : public Error {
public:
  using Error::Error;
};

class UnknownConnective : public Error {
public:
  using Error::Error;
};

/// A user connective returned a value outside the optionality/degree caps.
class BoundViolation : public Error {
public:
  using Error::Error;
};

class InvalidPath : public Error {
public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the formula has too many variables.
class EnumerationLimit : public Error {
public:
  EnumerationLimit(std::size_t variables, std::size_t cap)
      : Error("enumeration over " + std::to_string(variables) +
              " variables exceeds the cap of " + std::to_string(cap)),
        variables_(variables), cap_(cap) {}

  std::size_t variables() const noexcept { return variables_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t variables_;
  std::size_t cap_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class UnobtainableDegree : public Error {
public:
  using Error::Error;
};

class LogBoundViolation : public Error {
public:
  using Error::Error;
};

/// Raised when a constructed counterexample fails its own verification.
class ConstructionFailure : public Error {
public:
  using Error::Error;
};

} // namespace choicekit
