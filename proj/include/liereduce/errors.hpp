#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liereduce {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or problem text. `position` is a byte offset into the
/// offending string (expressions) or a 1-based line number (problem files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Numeric evaluation left the real domain of a kernel or power.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Random sampling could not find enough points inside the safe domain.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for its inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace liereduce
