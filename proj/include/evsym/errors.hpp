#ifndef EVSYM_ERRORS_HPP
#define EVSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evsym {

// A caller broke a documented precondition (unequal degrees, malformed input).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested degree exceeds the configured guard.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations that must agree did not. Always a defect.
class CrossCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace evsym

#endif  // EVSYM_ERRORS_HPP
