#pragma once

#include <stdexcept>

namespace zetaseries {

/// An argument lies outside the domain where a formula or series is defined.
class InvalidDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Logarithm of a non-positive number.
class NonPositiveArgument : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series hit its term cap before reaching the requested agreement.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zetaseries
