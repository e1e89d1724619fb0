#pragma once

#include <stdexcept>
#include <string>

namespace adasub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: unknown item, malformed policy id, out-of-range m, ...
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Conditioning on a partial realization with zero prior mass.
class ImpossibleObservationError : public Error {
 public:
  using Error::Error;
};

// Policy requires a cardinality instance but got knapsack (or vice versa).
class ConstraintMismatchError : public Error {
 public:
  using Error::Error;
};

// No feasible item exists (e.g. every cost exceeds the budget).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Exact expansion exceeded the node limit; callers fall back to Monte Carlo.
class TooLargeForExactError : public Error {
 public:
  using Error::Error;
};

// An oracle size guard tripped (support expansion, policy-tree count, ...).
class GuardExceededError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

}  // namespace adasub
