#include "evsym/identity_engine.hpp"

#include "evsym/parallel.hpp"

namespace evsym {

namespace {

void require_row_degree(const Partition& lambda, const Partition& mu) {
  if (mu.degree() != 2 * lambda.degree()) {
    throw ContractViolation("row sum: |" + to_string(mu) + "| must equal 2|" + to_string(lambda) + "|");
  }
}

}  // namespace

IdentityEngine::IdentityEngine(EngineOptions options)
    : options_(std::move(options)),
      store_(KostkaBuildOptions{options_.limits, options_.threads == 0 ? 1u : options_.threads, options_.cache_dir}) {}

TheoremReport IdentityEngine::verify_theorem(const Partition& lambda) const {
  TheoremReport report{lambda, alternating_ev_sum(lambda, options_.limits), theorem_rhs(lambda, options_.limits)};
  report.equal = report.lhs == report.rhs;
  for (const auto& [tau, c] : report.lhs.terms()) {
    report.max_part_in_support = std::max(report.max_part_in_support, tau.largest_part());
  }
  for (const auto& [tau, c] : report.rhs.terms()) {
    report.max_part_in_support = std::max(report.max_part_in_support, tau.largest_part());
  }
  return report;
}

std::shared_ptr<const KostkaSystem> IdentityEngine::kostka_system(int degree) {
  return store_.get(degree);
}

PowerSumSchurCache& IdentityEngine::schur_cache(int degree) {
  options_.limits.check_degree(degree, "character");
  {
    std::lock_guard lock(caches_mutex_);
    auto it = schur_caches_.find(degree);
    if (it != schur_caches_.end()) return *it->second;
  }
  auto system = store_.get(degree);
  std::lock_guard lock(caches_mutex_);
  auto& slot = schur_caches_[degree];
  if (!slot) slot = std::make_unique<PowerSumSchurCache>(std::move(system), options_.limits);
  return *slot;
}

bool IdentityEngine::sampled(const Partition& mu, const Partition& lambda) const {
  if (options_.cross_check_modulus == 0) return false;
  const std::size_t h = std::hash<Partition>{}(mu) * 31 + std::hash<Partition>{}(lambda);
  return (h >> 7) % options_.cross_check_modulus == 0;
}

BigInt IdentityEngine::character(const Partition& mu, const Partition& lambda,
                                 std::optional<CharacterBackend> backend) {
  if (mu.degree() != lambda.degree()) {
    throw ContractViolation("character: |" + to_string(mu) + "| != |" + to_string(lambda) + "|");
  }
  options_.limits.check_degree(mu.degree(), "character");
  if (backend.value_or(options_.backend) == CharacterBackend::Mn) return mn_.character(mu, lambda);

  BigInt value = schur_cache(mu.degree()).character(mu, lambda);
  if (sampled(mu, lambda)) {
    ++cross_checks_;
    BigInt check = mn_.character(mu, lambda);
    if (check != value) {
      throw CrossCheckFailure("character routes disagree at mu=" + to_string(mu) + ", lambda=" + to_string(lambda) +
                              ": schur " + value.get_str() + ", mn " + check.get_str());
    }
  }
  return value;
}

BigInt IdentityEngine::row_sum(const Partition& lambda, const Partition& mu, bool signed_sum,
                               std::optional<CharacterBackend> backend) {
  require_row_degree(lambda, mu);
  options_.limits.check_degree(mu.degree(), "row_sum");
  BigInt total = 0;
  for (const EvEntry& entry : ev_multiset(lambda).entries) {
    BigInt weight(static_cast<unsigned long>(entry.multiplicity));
    if (signed_sum && entry.sign() < 0) weight = -weight;
    total += weight * character(mu, entry.partition, backend);
  }
  return total;
}

std::shared_ptr<const SchurCoeffs> IdentityEngine::identity_schur_coeffs(const Partition& lambda) {
  {
    std::lock_guard lock(caches_mutex_);
    auto it = identity_coeffs_.find(lambda);
    if (it != identity_coeffs_.end()) return it->second;
  }
  const auto system = store_.get(2 * lambda.degree());
  auto coeffs = std::make_shared<const SchurCoeffs>(
      system->monomial_to_schur(theorem_rhs(lambda, options_.limits)));
  std::lock_guard lock(caches_mutex_);
  return identity_coeffs_.try_emplace(lambda, std::move(coeffs)).first->second;
}

BigInt IdentityEngine::row_sum_via_identity(const Partition& lambda, const Partition& mu) {
  require_row_degree(lambda, mu);
  options_.limits.check_degree(mu.degree(), "row_sum_via_identity");
  return identity_schur_coeffs(lambda)->coefficient(mu);
}

std::vector<RowSum> IdentityEngine::verify_corollary(const Partition& lambda) {
  const int n = lambda.degree();
  std::vector<RowSum> checked;
  for (const Partition& mu : partitions_of(2 * n, options_.limits)) {
    if (mu.largest_part() <= n) continue;
    BigInt value = row_sum_via_identity(lambda, mu);
    if (value != 0) {
      throw CrossCheckFailure("row sum for lambda=" + to_string(lambda) + ", mu=" + to_string(mu) +
                              " is " + value.get_str() + ", expected 0 since mu_1 > |lambda|");
    }
    checked.push_back({mu, value});
  }
  return checked;
}

ConjectureReport IdentityEngine::conjecture_report(const Partition& lambda, int N) {
  if (N < 1) throw ContractViolation("conjecture_report: N must be positive");
  const int m = 2 * lambda.degree();
  options_.limits.check_degree(m, "conjecture_report");
  // 2N+1 and 2N overflow int long before the families stop growing.
  const int even_row_bound = N >= m ? m + 1 : 2 * N + 1;
  const int even_col_bound = N >= m ? m + 1 : 2 * N;

  ConjectureReport report;
  report.lambda = lambda;
  report.N = N;
  for (const Partition& mu : restricted_even_rows(m, even_row_bound, options_.limits)) report.lhs_rows.push_back({mu, 0});
  for (const Partition& mu : restricted_even_cols(m, even_col_bound, options_.limits)) report.rhs_rows.push_back({mu, 0});

  const std::size_t left = report.lhs_rows.size();
  parallel_for(left + report.rhs_rows.size(), options_.threads, [&](std::size_t i) {
    if (i < left) {
      report.lhs_rows[i].sum = row_sum(lambda, report.lhs_rows[i].mu, true);
    } else {
      report.rhs_rows[i - left].sum = row_sum(lambda, report.rhs_rows[i - left].mu, false);
    }
  });
  for (const RowSum& row : report.lhs_rows) report.lhs += row.sum;
  for (const RowSum& row : report.rhs_rows) report.rhs += row.sum;
  report.equal = report.lhs == report.rhs;

  if (N >= saturation_n(lambda) && !report.equal) {
    throw CrossCheckFailure("conjugation pairing violated for lambda=" + to_string(lambda) + " at N=" +
                            std::to_string(N) + ": " + report.lhs.get_str() + " vs " + report.rhs.get_str());
  }
  return report;
}

std::vector<ConjectureReport> IdentityEngine::conjecture_sweep(const Partition& lambda) {
  std::vector<ConjectureReport> out;
  for (int N = 1; N <= saturation_n(lambda); ++N) out.push_back(conjecture_report(lambda, N));
  return out;
}

std::vector<std::vector<BigInt>> IdentityEngine::character_table_slice(int degree, const std::vector<Partition>& rows,
                                                                       const std::vector<Partition>& cols,
                                                                       std::optional<CharacterBackend> backend) {
  options_.limits.check_degree(degree, "character_table_slice");
  for (const auto* family : {&rows, &cols}) {
    for (const Partition& p : *family) {
      if (p.degree() != degree) {
        throw ContractViolation("character table: " + to_string(p) + " is not a partition of " + std::to_string(degree));
      }
    }
  }
  std::vector<std::vector<BigInt>> table(rows.size(), std::vector<BigInt>(cols.size()));
  parallel_for(rows.size(), options_.threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < cols.size(); ++j) table[i][j] = character(rows[i], cols[j], backend);
  });
  return table;
}

}  // namespace evsym
