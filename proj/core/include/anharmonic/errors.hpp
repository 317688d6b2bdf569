#pragma once

#include <stdexcept>
#include <string>

namespace anharmonic {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result magnitude exceeds the range of double (distinct from DomainError).
class OverflowError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// A quadratic form turned out not to be positive definite.
class NotPositiveDefinite : public std::runtime_error {
 public:
  NotPositiveDefinite(const std::string& what, int index)
      : std::runtime_error(what), failing_index(index) {}
  int failing_index;
};

/// An iteration diverged, blew up, or failed to reach tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what, int index = -1)
      : std::runtime_error(what), failing_index(index) {}
  int failing_index;
};

/// File or stream failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace anharmonic
