#include <gtest/gtest.h>

#include "evsym/identity_engine.hpp"

namespace evsym {
namespace {

using P = Partition;

IdentityEngine& engine() {
  static IdentityEngine instance;
  return instance;
}

TEST(Theorem, WorkedExample) {
  const auto report = engine().verify_theorem(P{2, 1});
  EXPECT_TRUE(report.equal);
  EXPECT_EQ(to_text(report.lhs), "4*m[2,2,1,1] + 4*m[3,2,1] + 4*m[3,3]");
  EXPECT_EQ(report.max_part_in_support, 3);
}

TEST(Theorem, HoldsForAllSmallDegrees) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto report = engine().verify_theorem(lambda);
      EXPECT_TRUE(report.equal) << to_string(lambda);
      EXPECT_LE(report.max_part_in_support, n);
      for (const auto& [mu, c] : report.rhs.terms()) {
        EXPECT_TRUE(mpz_divisible_2exp_p(c.get_mpz_t(), lambda.length()));
      }
    }
  }
}

TEST(Character, BackendsAgreeAndCrossCheckRuns) {
  IdentityEngine local;
  for (const auto& mu : partitions_of(8)) {
    for (const auto& lambda : partitions_of(8)) {
      EXPECT_EQ(local.character(mu, lambda, CharacterBackend::Schur), local.character(mu, lambda, CharacterBackend::Mn));
    }
  }
  EXPECT_GT(local.cross_checks_performed(), 0u);
}

TEST(RowSum, Examples) {
  EXPECT_EQ(engine().row_sum(P{2, 2, 1}, P{4, 4, 2}, true), -16);
  EXPECT_EQ(engine().row_sum(P{2, 2, 1}, P{10}, true), 0);
  EXPECT_EQ(engine().row_sum(P{2, 2, 1}, P{5, 5}, false), -16);
  EXPECT_EQ(engine().row_sum_via_identity(P{2, 2, 1}, P{4, 2, 2, 2}), -16);
  EXPECT_EQ(engine().row_sum_via_identity(P{2, 2, 1}, P{8, 2}), 0);
  EXPECT_THROW(engine().row_sum(P{2, 2, 1}, P{5}, true), ContractViolation);
}

TEST(RowSum, IdentityRouteMatchesDirectSum) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(2 * n)) {
        EXPECT_EQ(engine().row_sum(lambda, mu, true), engine().row_sum_via_identity(lambda, mu))
            << to_string(lambda) << ' ' << to_string(mu);
      }
    }
  }
}

TEST(Corollary, VanishesAboveDegree) {
  EXPECT_EQ(engine().verify_corollary(P{1}), (std::vector<RowSum>{{P{2}, 0}}));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& row : engine().verify_corollary(lambda)) {
        EXPECT_GT(row.mu.largest_part(), n);
        EXPECT_EQ(row.sum, 0);
      }
    }
  }
}

TEST(Conjecture, TwoTwoOneSweep) {
  const auto n1 = engine().conjecture_report(P{2, 2, 1}, 1);
  EXPECT_EQ(n1.lhs, -16);
  EXPECT_EQ(n1.rhs, -16);
  EXPECT_TRUE(n1.equal);
  for (int N = 2; N <= 5; ++N) {
    const auto report = engine().conjecture_report(P{2, 2, 1}, N);
    EXPECT_EQ(report.lhs, -48) << N;
    EXPECT_TRUE(report.equal);
  }
}

TEST(Conjecture, ReportInvariants) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& report : engine().conjecture_sweep(lambda)) {
        EXPECT_EQ(report.lhs_rows.size(), restricted_even_rows(2 * n, 2 * report.N + 1).size());
        EXPECT_EQ(report.rhs_rows.size(), restricted_even_cols(2 * n, 2 * report.N).size());
        BigInt lhs = 0, rhs = 0;
        for (const auto& r : report.lhs_rows) lhs += r.sum;
        for (const auto& r : report.rhs_rows) rhs += r.sum;
        EXPECT_EQ(lhs, report.lhs);
        EXPECT_EQ(rhs, report.rhs);
        EXPECT_EQ(report.equal, report.lhs == report.rhs);
      }
      const auto saturated = engine().conjecture_report(lambda, IdentityEngine::saturation_n(lambda));
      EXPECT_TRUE(saturated.equal) << to_string(lambda);
    }
  }
}

TEST(Conjecture, ConjugatePairsMatchRowByRow) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto report = engine().conjecture_report(lambda, IdentityEngine::saturation_n(lambda));
      ASSERT_EQ(report.lhs_rows.size(), report.rhs_rows.size());
      for (const auto& row : report.lhs_rows) {
        const auto mate = conjugate(row.mu);
        const auto it = std::find_if(report.rhs_rows.begin(), report.rhs_rows.end(),
                                     [&](const RowSum& r) { return r.mu == mate; });
        ASSERT_NE(it, report.rhs_rows.end());
        EXPECT_EQ(it->sum, row.sum);
      }
    }
  }
}

TEST(Conjecture, Errors) {
  EXPECT_THROW(engine().conjecture_report(P{2, 1}, 0), ContractViolation);
}

TEST(Conjecture, EmptyPartitionIsTrivial) {
  const auto report = engine().conjecture_report(P{}, 1);
  EXPECT_EQ(report.lhs, 1);
  EXPECT_EQ(report.rhs, 1);
  EXPECT_TRUE(report.equal);
}

TEST(CharacterTable, SliceAndErrors) {
  const auto table = engine().character_table_slice(3, partitions_of(3), partitions_of(3));
  const std::vector<std::vector<BigInt>> expected{{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
  EXPECT_EQ(table, expected);
  EXPECT_THROW(engine().character_table_slice(3, {P{2}}, {P{3}}), ContractViolation);
}

TEST(Guards, DegreeLimit) {
  IdentityEngine small(EngineOptions{Limits{6}});
  EXPECT_THROW(small.verify_theorem(P{4}), ResourceGuardError);
  EXPECT_THROW(small.character(P{7}, P{7}), ResourceGuardError);
  EXPECT_NO_THROW(small.verify_theorem(P{3}));
}

}  // namespace
}  // namespace evsym
