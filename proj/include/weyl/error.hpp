#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (division by zero, gcd(0, 0), ...).
struct DomainError : Error {
  using Error::Error;
};

/// Input text that does not match the expression grammar.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called on an element of the wrong shape or class.
struct PreconditionError : Error {
  using Error::Error;
};

/// ndeg requested for an element outside N(u, A1).
struct NotInNError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Iterated ad did not vanish within the configured number of steps.
struct IterationCapError : Error {
  using Error::Error;
};

}  // namespace weyl
