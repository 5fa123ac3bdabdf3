#pragma once

#include <stdexcept>
#include <string>

namespace orbithodge {

// Caller violated a documented precondition (bad input, mismatched rings, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic outside the domain of an operation, e.g. inverting zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation could not be completed (resource caps, exponent overflow).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Always indicates a bug or a bad prime.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orbithodge
