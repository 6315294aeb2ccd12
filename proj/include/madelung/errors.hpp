#pragma once

#include <stdexcept>
#include <string>

namespace madelung {

/// Argument hits a pole of a meromorphic function.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series failed to reach its remainder target within the allowed number of terms.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table lookup or enumeration exceeded its precomputed range or budget.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace madelung
