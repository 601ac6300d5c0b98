#pragma once

#include <stdexcept>

namespace gammasym {

/// Thrown when an operation that needs an admissible index set gets one
/// that is not.
class NotAdmissibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when two independent computations of the same quantity disagree.
class DiscrepancyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gammasym
