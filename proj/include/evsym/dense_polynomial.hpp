#ifndef EVSYM_DENSE_POLYNOMIAL_HPP
#define EVSYM_DENSE_POLYNOMIAL_HPP

#include <map>
#include <vector>

#include "evsym/config.hpp"
#include "evsym/monomial.hpp"

namespace evsym {

/// A homogeneous polynomial in finitely many variables, stored term by term
/// on exponent vectors. Used as an independent check of the monomial-basis
/// arithmetic; its size grows multinomially, so keep degrees small.
class DensePolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit DensePolynomial(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  void add_term(const Exponents& exponents, const BigInt& c);

  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b);
  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) = default;

 private:
  int num_vars_;
  std::map<Exponents, BigInt> terms_;
};

/// Image of f under x_{k} ↦ 0 for k > num_vars. Faithful on Λ^d when
/// num_vars ≥ d; smaller values throw ContractViolation.
DensePolynomial to_dense(const MonomialExpansion& f, int num_vars);

}  // namespace evsym

#endif  // EVSYM_DENSE_POLYNOMIAL_HPP
