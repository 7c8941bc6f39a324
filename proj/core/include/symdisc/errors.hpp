#pragma once

#include <stdexcept>
#include <string>

namespace symdisc {

/// Thrown when two exact scalars with different irrational parts are added
/// or subtracted (e.g. sqrt(2) + sqrt(pi)).
class IncompatibleBasisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an iterative kernel (eigensolver, quadrature root finder)
/// fails to reach its tolerance within the iteration cap.
class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an input violates a genericity precondition: repeated
/// eigenvalues where simple ones are required, or tied minimal distances
/// that make "the" nearest point ill-defined.
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an argument is outside the documented domain of an operation.
class OutOfRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when serialized input (matrix, report, polynomial) is malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symdisc
