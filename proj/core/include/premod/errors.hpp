// Error taxonomy shared by all modules. Every failure mode that callers are
// expected to handle gets its own type; anything else is an InternalError.
#pragma once

#include <stdexcept>
#include <string>

namespace premod {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument shape: wrong variable, out-of-range index, malformed input.
class ArgumentError : public Error {
public:
  using Error::Error;
};

// Inexact polynomial division where exactness was required.
class DivisionError : public Error {
public:
  using Error::Error;
};

// A claimed-symmetric expression left residual root variables after reduction.
class SymmetryError : public Error {
public:
  using Error::Error;
};

// Requested n (or mode) outside the implemented table range.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

// Resultant pipeline failure: degree drop, non-monic quotient, identity mismatch.
class EliminationError : public Error {
public:
  using Error::Error;
};

// Input outside the mathematical domain (e.g. tau not in the upper half-plane).
class DomainError : public Error {
public:
  using Error::Error;
};

// Evaluation at (or numerically indistinguishable from) a pole.
class PoleError : public Error {
public:
  using Error::Error;
};

// An iteration failed to meet its tolerance within its budget.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// A numeric construction (root matching, sign search) had no clear winner.
class ConstructionError : public Error {
public:
  using Error::Error;
};

// A cross-check between two independently computed quantities failed.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

// Invariant breakage that indicates a bug in this library, not in the caller.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace premod
