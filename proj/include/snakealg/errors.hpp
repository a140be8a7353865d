#pragma once

#include <stdexcept>
#include <string>

namespace snakealg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (snake or monoid element syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (rank mismatch, non-prime
/// snake where a prime one is required, index out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A structural claim that should hold for every valid input failed.
/// Carries a human-readable witness. Reaching this is either an
/// implementation bug or a counterexample; never a user error.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace snakealg
