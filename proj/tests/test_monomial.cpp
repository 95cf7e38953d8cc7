#include <gtest/gtest.h>

#include <random>

#include "evsym/dense_polynomial.hpp"
#include "evsym/monomial.hpp"
#include "oracles.hpp"

namespace evsym {
namespace {

using P = Partition;
using M = MonomialExpansion;

M expansion(int degree, std::initializer_list<std::pair<P, long>> terms) {
  M f(degree);
  for (const auto& [p, c] : terms) f.add_term(p, c);
  return f;
}

TEST(MonomialExpansion, DropsZerosAndChecksHomogeneity) {
  M f(3);
  f.add_term(P{2, 1}, 2);
  f.add_term(P{2, 1}, -2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_THROW(f.add_term(P{2}, 1), ContractViolation);
  EXPECT_THROW(f += M(2), ContractViolation);
  f.add_term(P{3}, 0);
  EXPECT_EQ(f.size(), 0u);
}

TEST(MonomialProduct, Examples) {
  EXPECT_EQ(monomial_product(P{1}, P{1}), expansion(2, {{P{2}, 1}, {P{1, 1}, 2}}));
  EXPECT_EQ(monomial_product(P{2, 2}, P{1, 1}),
            expansion(6, {{P{2, 2, 1, 1}, 1}, {P{3, 2, 1}, 1}, {P{3, 3}, 1}}));
  EXPECT_EQ(monomial_product(P{2}, P{1}), expansion(3, {{P{3}, 1}, {P{2, 1}, 1}}));
  EXPECT_EQ(monomial_product(P{}, P{3, 1}), M::basis(P{3, 1}));
}

TEST(MonomialProduct, TwoVariableOracle) {
  // m_2 · m_1 in three variables, multiplied out by hand-free dense route.
  const auto dense = to_dense(M::basis(P{2}), 3) * to_dense(M::basis(P{1}), 3);
  EXPECT_EQ(to_dense(monomial_product(P{2}, P{1}), 3), dense);
}

TEST(MonomialProduct, AgreesWithDenseMultiplication) {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; a + b <= 8; ++b) {
      for (const auto& mu : partitions_of(a)) {
        for (const auto& nu : partitions_of(b)) {
          const int vars = a + b;
          const auto expected = to_dense(M::basis(mu), vars) * to_dense(M::basis(nu), vars);
          EXPECT_EQ(to_dense(monomial_product(mu, nu), vars), expected) << to_string(mu) << " * " << to_string(nu);
        }
      }
    }
  }
}

TEST(MonomialProduct, SameDegreeDenseCheckUpToSix) {
  // Both factors of degree m, compared in 2m variables.
  for (int m = 1; m <= 6; ++m) {
    const auto family = partitions_of(m);
    std::mt19937 rng(static_cast<unsigned>(m));
    for (const auto& mu : family) {
      for (const auto& nu : family) {
        // m = 6 in 12 variables is the expensive corner; sample it.
        if (m == 6 && rng() % 12 != 0) continue;
        const auto expected = to_dense(M::basis(mu), 2 * m) * to_dense(M::basis(nu), 2 * m);
        EXPECT_EQ(to_dense(monomial_product(mu, nu), 2 * m), expected) << to_string(mu) << " * " << to_string(nu);
      }
    }
  }
}

M random_expansion(std::mt19937& rng, int degree) {
  const auto family = partitions_of(degree);
  std::uniform_int_distribution<int> coeff(-5, 5);
  M f(degree);
  for (const auto& p : family) {
    if (rng() % 2) f.add_term(p, coeff(rng));
  }
  return f;
}

TEST(MonomialProduct, RingLawsOnRandomTriples) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const M f = random_expansion(rng, deg(rng));
    const M g = random_expansion(rng, deg(rng));
    const M h = random_expansion(rng, std::uniform_int_distribution<int>(0, 4)(rng));
    EXPECT_EQ(monomial_product(f, g), monomial_product(g, f));
    EXPECT_EQ(monomial_product(monomial_product(f, g), h), monomial_product(f, monomial_product(g, h)));
  }
}

TEST(PowerToMonomial, Examples) {
  EXPECT_EQ(power_to_monomial(P{5}), M::basis(P{5}));
  EXPECT_EQ(power_to_monomial(P{2, 1}), expansion(3, {{P{3}, 1}, {P{2, 1}, 1}}));
  EXPECT_EQ(power_to_monomial(P{1, 1}), expansion(2, {{P{2}, 1}, {P{1, 1}, 2}}));
  EXPECT_THROW(power_to_monomial(P(std::vector<int>(25, 1))), ResourceGuardError);
}

TEST(PowerToMonomial, AgreesWithDensePowerSums) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto f = power_to_monomial(lambda);
      for (const auto& [mu, c] : f.terms()) EXPECT_GT(c, 0);
      EXPECT_EQ(to_dense(f, n), oracle::dense_power_product(lambda.part_vector(), n)) << to_string(lambda);
    }
  }
}

TEST(TheoremSides, WorkedExample) {
  const M expected = expansion(6, {{P{2, 2, 1, 1}, 4}, {P{3, 2, 1}, 4}, {P{3, 3}, 4}});
  EXPECT_EQ(alternating_ev_sum(P{2, 1}), expected);
  EXPECT_EQ(theorem_rhs(P{2, 1}), expected);
}

TEST(TheoremSides, SinglePartCases) {
  EXPECT_EQ(alternating_ev_sum(P{1}), expansion(2, {{P{1, 1}, 2}}));
  EXPECT_EQ(theorem_rhs(P{1}), expansion(2, {{P{1, 1}, 2}}));
  EXPECT_EQ(theorem_rhs(P{3}), expansion(6, {{P{3, 3}, 2}}));
  EXPECT_EQ(theorem_rhs(P{}), M::basis(P{}));
}

TEST(TheoremSides, TwoTwoAgainstDenseOracleInEightVariables) {
  const int vars = 8;
  // Σ over Ev((2,2)) written out from the definition: p_44 − 2 p_422 + p_2222.
  DensePolynomial lhs = oracle::dense_power_product({4, 4}, vars);
  const DensePolynomial p422 = oracle::dense_power_product({4, 2, 2}, vars);
  DensePolynomial minus_two(vars);
  for (const auto& [e, c] : p422.terms()) minus_two.add_term(e, -2 * c);
  lhs = lhs + minus_two + oracle::dense_power_product({2, 2, 2, 2}, vars);
  const DensePolynomial m22_squared = oracle::dense_two_row(2, vars) * oracle::dense_two_row(2, vars);
  DensePolynomial rhs(vars);
  for (const auto& [e, c] : m22_squared.terms()) rhs.add_term(e, 4 * c);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(to_dense(alternating_ev_sum(P{2, 2}), vars), lhs);
  EXPECT_EQ(to_dense(theorem_rhs(P{2, 2}), vars), rhs);
}

TEST(TheoremSides, IdentitySupportAndDivisibilityUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto rhs = theorem_rhs(lambda);
      EXPECT_EQ(alternating_ev_sum(lambda), rhs) << to_string(lambda);
      BigInt scale = BigInt(1) << lambda.length();
      for (const auto& [tau, c] : rhs.terms()) {
        EXPECT_LE(tau.largest_part(), n);
        EXPECT_TRUE(mpz_divisible_p(c.get_mpz_t(), scale.get_mpz_t()));
      }
    }
  }
}

TEST(ToDense, Examples) {
  DensePolynomial e11(3);
  e11.add_term({1, 1, 0}, 1);
  e11.add_term({1, 0, 1}, 1);
  e11.add_term({0, 1, 1}, 1);
  EXPECT_EQ(to_dense(M::basis(P{1, 1}), 3), e11);

  DensePolynomial e2(2);
  e2.add_term({2, 0}, 1);
  e2.add_term({0, 2}, 1);
  EXPECT_EQ(to_dense(M::basis(P{2}), 2), e2);

  DensePolynomial x1_plus_x2(2);
  x1_plus_x2.add_term({1, 0}, 1);
  x1_plus_x2.add_term({0, 1}, 1);
  EXPECT_EQ(to_dense(expansion(2, {{P{2}, 1}, {P{1, 1}, 2}}), 2), x1_plus_x2 * x1_plus_x2);

  EXPECT_THROW(to_dense(M::basis(P{2, 1}), 2), ContractViolation);
}

TEST(ToText, Rendering) {
  EXPECT_EQ(to_text(theorem_rhs(P{2, 1})), "4*m[2,2,1,1] + 4*m[3,2,1] + 4*m[3,3]");
  EXPECT_EQ(to_text(M(4)), "0");
  EXPECT_EQ(to_text(expansion(2, {{P{2}, -1}, {P{1, 1}, 1}})), "m[1,1] - m[2]");
  EXPECT_EQ(to_text(M::basis(P{})), "m[]");
}

}  // namespace
}  // namespace evsym
