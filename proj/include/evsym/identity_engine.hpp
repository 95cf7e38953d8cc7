#ifndef EVSYM_IDENTITY_ENGINE_HPP
#define EVSYM_IDENTITY_ENGINE_HPP

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "evsym/config.hpp"
#include "evsym/monomial.hpp"
#include "evsym/murnaghan_nakayama.hpp"
#include "evsym/partition.hpp"
#include "evsym/schur_transition.hpp"

namespace evsym {

enum class CharacterBackend { Schur, Mn };

struct EngineOptions {
  Limits limits;
  CharacterBackend backend = CharacterBackend::Schur;
  unsigned threads = 1;  // 0: hardware concurrency
  std::optional<std::filesystem::path> cache_dir;
  // Every Schur-route character whose (μ, λ) hash is divisible by this is
  // recomputed by Murnaghan–Nakayama (20 samples 5%); 0 disables.
  unsigned cross_check_modulus = 20;
};

struct RowSum {
  Partition mu;
  BigInt sum;
  friend bool operator==(const RowSum&, const RowSum&) = default;
};

struct TheoremReport {
  Partition lambda;
  MonomialExpansion lhs;
  MonomialExpansion rhs;
  bool equal = false;
  int max_part_in_support = 0;
};

/// Both sides of the Ev character-sum conjecture for one λ and N: the signed
/// sum over even-row shapes with at most 2N+1 rows and the unsigned sum over
/// even-column shapes with at most 2N rows.
struct ConjectureReport {
  Partition lambda;
  int N = 1;
  BigInt lhs;
  BigInt rhs;
  std::vector<RowSum> lhs_rows;
  std::vector<RowSum> rhs_rows;
  bool equal = false;
};

class IdentityEngine {
 public:
  explicit IdentityEngine(EngineOptions options = {});

  const EngineOptions& options() const { return options_; }

  TheoremReport verify_theorem(const Partition& lambda) const;

  /// χ^μ_λ. Defaults to the configured backend; the Schur route is sampled
  /// against Murnaghan–Nakayama and throws CrossCheckFailure on disagreement.
  BigInt character(const Partition& mu, const Partition& lambda,
                   std::optional<CharacterBackend> backend = std::nullopt);

  /// Σ_{λ̃ ∈ Ev(λ)} w(λ̃) χ^μ_{λ̃} with w = (−1)^{ℓ(λ̃)} if `signed_sum`
  /// and 1 otherwise; multiplicities included.
  BigInt row_sum(const Partition& lambda, const Partition& mu, bool signed_sum,
                 std::optional<CharacterBackend> backend = std::nullopt);

  /// The signed row sum computed as 2^ℓ(λ) times the s_μ coefficient of
  /// ∏ m_{λ_i λ_i}.
  BigInt row_sum_via_identity(const Partition& lambda, const Partition& mu);

  /// 2^ℓ(λ) ∏ m_{λ_i λ_i} in the Schur basis; cached per λ.
  std::shared_ptr<const SchurCoeffs> identity_schur_coeffs(const Partition& lambda);

  /// Checks every μ ⊢ 2|λ| with μ_1 > |λ| has a zero signed row sum, and
  /// returns the checked pairs. Throws CrossCheckFailure naming (λ, μ)
  /// otherwise.
  std::vector<RowSum> verify_corollary(const Partition& lambda);

  /// Equality is reported, not assumed, except at N ≥ |λ| where both index
  /// families are complete and conjugation forces lhs = rhs; a miss there
  /// throws CrossCheckFailure.
  ConjectureReport conjecture_report(const Partition& lambda, int N);

  /// Smallest N at which both index families contain every admissible shape.
  static int saturation_n(const Partition& lambda) { return std::max(1, lambda.degree()); }

  /// Reports for N = 1 .. saturation_n(λ).
  std::vector<ConjectureReport> conjecture_sweep(const Partition& lambda);

  /// Matrix of χ^{row}_{col}.
  std::vector<std::vector<BigInt>> character_table_slice(int degree, const std::vector<Partition>& rows,
                                                         const std::vector<Partition>& cols,
                                                         std::optional<CharacterBackend> backend = std::nullopt);

  std::shared_ptr<const KostkaSystem> kostka_system(int degree);

  /// Number of Schur-route lookups that were compared against the MN route.
  std::size_t cross_checks_performed() const { return cross_checks_.load(); }

 private:
  PowerSumSchurCache& schur_cache(int degree);
  bool sampled(const Partition& mu, const Partition& lambda) const;

  EngineOptions options_;
  KostkaSystemStore store_;
  MnCharacterEngine mn_;
  std::atomic<std::size_t> cross_checks_{0};

  std::mutex caches_mutex_;
  std::map<int, std::unique_ptr<PowerSumSchurCache>> schur_caches_;
  std::map<Partition, std::shared_ptr<const SchurCoeffs>> identity_coeffs_;
};

}  // namespace evsym

#endif  // EVSYM_IDENTITY_ENGINE_HPP
