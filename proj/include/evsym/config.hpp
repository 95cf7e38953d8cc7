#ifndef EVSYM_CONFIG_HPP
#define EVSYM_CONFIG_HPP

#include <string>

#include <gmpxx.h>

#include "evsym/errors.hpp"

namespace evsym {

using BigInt = mpz_class;

/// Resource limits shared by every module. The default guard admits
/// symmetric functions of degree 24, i.e. Ev(λ) for |λ| ≤ 12.
struct Limits {
  int max_degree = 24;

  void check_degree(int degree, const char* what) const {
    if (degree > max_degree) {
      throw ResourceGuardError(std::string(what) + ": degree " + std::to_string(degree) +
                               " exceeds guard " + std::to_string(max_degree));
    }
  }
};

}  // namespace evsym

#endif  // EVSYM_CONFIG_HPP
