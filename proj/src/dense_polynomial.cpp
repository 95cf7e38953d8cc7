#include "evsym/dense_polynomial.hpp"

#include <algorithm>

namespace evsym {

DensePolynomial::DensePolynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw ContractViolation("DensePolynomial: need at least one variable");
}

void DensePolynomial::add_term(const Exponents& exponents, const BigInt& c) {
  if (static_cast<int>(exponents.size()) != num_vars_) {
    throw ContractViolation("DensePolynomial: exponent vector has wrong length");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw ContractViolation("DensePolynomial: variable count mismatch");
  DensePolynomial out(a.num_vars_);
  DensePolynomial::Exponents e(static_cast<std::size_t>(a.num_vars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw ContractViolation("DensePolynomial: variable count mismatch");
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  return a;
}

DensePolynomial to_dense(const MonomialExpansion& f, int num_vars) {
  if (num_vars < f.degree() || num_vars < 1) {
    throw ContractViolation("to_dense: " + std::to_string(num_vars) +
                            " variables cannot faithfully represent degree " + std::to_string(f.degree()));
  }
  DensePolynomial out(num_vars);
  for (const auto& [lambda, c] : f.terms()) {
    std::vector<int> exponents(lambda.parts().begin(), lambda.parts().end());
    exponents.resize(static_cast<std::size_t>(num_vars), 0);
    std::sort(exponents.begin(), exponents.end());
    do {
      out.add_term(exponents, c);
    } while (std::next_permutation(exponents.begin(), exponents.end()));
  }
  return out;
}

}  // namespace evsym
