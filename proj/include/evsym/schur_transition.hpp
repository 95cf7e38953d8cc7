#ifndef EVSYM_SCHUR_TRANSITION_HPP
#define EVSYM_SCHUR_TRANSITION_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "evsym/config.hpp"
#include "evsym/monomial.hpp"
#include "evsym/partition.hpp"

namespace evsym {

/// Number of semistandard tableaux of the given shape and content.
/// Memoized process-wide; safe to call concurrently.
BigInt kostka(const Partition& shape, const Partition& content);

/// Row-major sparse square matrix; each row holds (column, value) pairs in
/// increasing column order with no stored zeros.
struct SparseMatrix {
  using Row = std::vector<std::pair<std::size_t, BigInt>>;

  std::size_t size = 0;
  std::vector<Row> rows;

  BigInt at(std::size_t i, std::size_t j) const;
  std::size_t nonzeros() const;
  SparseMatrix transposed() const;
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// Coefficients of a symmetric function in the Schur basis.
struct SchurCoeffs {
  int degree = 0;
  std::map<Partition, BigInt> terms;

  BigInt coefficient(const Partition& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? BigInt(0) : it->second;
  }
};

/// The monomial ↔ Schur transition for one degree n.
///
/// `order()` lists the partitions of n in canonical order, which refines
/// dominance, so the Kostka matrix K (s_λ = Σ_μ K[λ][μ] m_μ) is upper
/// unitriangular in index terms. The inverse satisfies
/// m_τ = Σ_μ K_inv[τ][μ] s_μ. Immutable after construction.
class KostkaSystem {
 public:
  /// Assembles a system from precomputed matrices and checks
  /// unitriangularity under dominance; throws CrossCheckFailure otherwise.
  KostkaSystem(int degree, std::vector<Partition> order, SparseMatrix kostka, SparseMatrix inverse);

  int degree() const { return degree_; }
  const std::vector<Partition>& order() const { return order_; }
  std::size_t index_of(const Partition& p) const;

  const SparseMatrix& kostka_matrix() const { return kostka_; }
  const SparseMatrix& inverse_matrix() const { return inverse_; }

  /// s_μ in the monomial basis: the μ-th row of K.
  MonomialExpansion schur_to_monomial(const Partition& mu) const;

  /// Solves f = Σ_ν d_ν s_ν by forward substitution along the order.
  SchurCoeffs monomial_to_schur(const MonomialExpansion& f) const;

  /// χ^μ_λ as the s_μ coefficient of p_λ.
  BigInt character(const Partition& mu, const Partition& lambda) const;

  /// Exact check that K · K_inv is the identity.
  bool inverse_is_exact() const;

 private:
  int degree_;
  std::vector<Partition> order_;
  std::unordered_map<Partition, std::size_t> index_;
  SparseMatrix kostka_;
  SparseMatrix kostka_columns_;  // transpose of kostka_
  SparseMatrix inverse_;
};

struct KostkaBuildOptions {
  Limits limits;
  unsigned threads = 1;
  // When set, systems are read from and written to this directory.
  std::optional<std::filesystem::path> cache_dir;
};

/// Builds (or loads from cache) the system of degree n. Freshly built
/// systems are checked for K · K_inv = I before being returned.
KostkaSystem build_kostka_system(int n, const KostkaBuildOptions& options = {});

/// Independent-of-cache construction used by build_kostka_system.
KostkaSystem compute_kostka_system(int n, const Limits& limits = {}, unsigned threads = 1);

BigInt character_via_schur(const KostkaSystem& system, const Partition& mu, const Partition& lambda);

/// Thread-safe per-degree registry of shared systems.
class KostkaSystemStore {
 public:
  explicit KostkaSystemStore(KostkaBuildOptions options = {}) : options_(std::move(options)) {}

  std::shared_ptr<const KostkaSystem> get(int n);
  const KostkaBuildOptions& options() const { return options_; }

 private:
  KostkaBuildOptions options_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const KostkaSystem>> systems_;
};

/// Caches p_λ in the Schur basis for every λ of one degree, so a whole
/// column of character values costs one triangular solve.
class PowerSumSchurCache {
 public:
  explicit PowerSumSchurCache(std::shared_ptr<const KostkaSystem> system, Limits limits = {})
      : system_(std::move(system)), limits_(limits) {}

  const KostkaSystem& system() const { return *system_; }
  std::shared_ptr<const SchurCoeffs> power_sum(const Partition& lambda);
  BigInt character(const Partition& mu, const Partition& lambda);

 private:
  std::shared_ptr<const KostkaSystem> system_;
  Limits limits_;
  std::shared_mutex mutex_;
  std::unordered_map<Partition, std::shared_ptr<const SchurCoeffs>> columns_;
};

}  // namespace evsym

#endif  // EVSYM_SCHUR_TRANSITION_HPP
