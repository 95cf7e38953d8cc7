#ifndef EVSYM_MONOMIAL_HPP
#define EVSYM_MONOMIAL_HPP

#include <map>
#include <string>

#include "evsym/config.hpp"
#include "evsym/partition.hpp"

namespace evsym {

/// A homogeneous symmetric function written in the monomial basis:
/// Σ c_λ m_λ over partitions λ of a fixed degree, with exact integer
/// coefficients. Zero coefficients are never stored, so the zero function
/// of any degree is the empty expansion.
class MonomialExpansion {
 public:
  using Terms = std::map<Partition, BigInt>;

  explicit MonomialExpansion(int degree = 0);

  /// The basis element m_λ.
  static MonomialExpansion basis(const Partition& lambda);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Partition& lambda) const;

  /// Adds c·m_λ. Throws ContractViolation if |λ| differs from the degree.
  void add_term(const Partition& lambda, const BigInt& c);

  MonomialExpansion& operator+=(const MonomialExpansion& other);
  MonomialExpansion& operator-=(const MonomialExpansion& other);
  MonomialExpansion& operator*=(const BigInt& scalar);

  friend MonomialExpansion operator+(MonomialExpansion a, const MonomialExpansion& b) { return a += b; }
  friend MonomialExpansion operator-(MonomialExpansion a, const MonomialExpansion& b) { return a -= b; }
  friend MonomialExpansion operator*(MonomialExpansion a, const BigInt& s) { return a *= s; }
  friend MonomialExpansion operator*(const BigInt& s, MonomialExpansion a) { return a *= s; }

  friend bool operator==(const MonomialExpansion& a, const MonomialExpansion& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  Terms terms_;
};

/// m_μ · m_ν in the monomial basis (overlay count over distinct rearrangements).
MonomialExpansion monomial_product(const Partition& mu, const Partition& nu);

/// Bilinear extension of the basis product.
MonomialExpansion monomial_product(const MonomialExpansion& f, const MonomialExpansion& g);

/// p_λ = p_{λ_1} p_{λ_2} ⋯ expanded in the monomial basis.
MonomialExpansion power_to_monomial(const Partition& lambda, const Limits& limits = {});

/// Σ_{λ̃ ∈ Ev(λ)} (−1)^{ℓ(λ̃)} p_{λ̃}, multiplicities included.
MonomialExpansion alternating_ev_sum(const Partition& lambda, const Limits& limits = {});

/// ∏_i m_{(λ_i, λ_i)} without the 2^ℓ(λ) factor.
MonomialExpansion two_row_product(const Partition& lambda, const Limits& limits = {});

/// 2^ℓ(λ) ∏_i m_{(λ_i, λ_i)}.
MonomialExpansion theorem_rhs(const Partition& lambda, const Limits& limits = {});

/// "4*m[2,2,1,1] + 4*m[3,2,1] + 4*m[3,3]": terms in increasing lexicographic
/// order of their partitions, unit coefficients elided, "0" for zero.
std::string to_text(const MonomialExpansion& f);

}  // namespace evsym

#endif  // EVSYM_MONOMIAL_HPP
