#ifndef EVSYM_MURNAGHAN_NAKAYAMA_HPP
#define EVSYM_MURNAGHAN_NAKAYAMA_HPP

#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "evsym/config.hpp"
#include "evsym/partition.hpp"

namespace evsym {

struct RimHookRemoval {
  Partition remaining;
  int height = 0;  // rows spanned minus one
  friend bool operator==(const RimHookRemoval&, const RimHookRemoval&) = default;
};

/// Every border strip of k cells whose removal from μ leaves a partition,
/// ordered by the remaining partition in canonical order.
/// Throws ContractViolation unless 1 ≤ k ≤ |μ|.
std::vector<RimHookRemoval> rim_hooks(const Partition& mu, int k);

enum class PeelOrder { LargestFirst, SmallestFirst };

/// χ^μ_λ by the Murnaghan–Nakayama recursion with a private memo keyed by
/// (μ, unpeeled parts of λ). Concurrent calls are safe; a value may be
/// computed twice by racing threads but is stored once.
class MnCharacterEngine {
 public:
  explicit MnCharacterEngine(PeelOrder order = PeelOrder::LargestFirst) : order_(order) {}

  BigInt character(const Partition& mu, const Partition& lambda);

  std::size_t cache_size() const;

 private:
  struct Key {
    Partition mu;
    Partition rest;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::hash<Partition> h;
      return h(k.mu) * 0x9e3779b97f4a7c15ULL ^ h(k.rest);
    }
  };

  BigInt evaluate(const Partition& mu, const Partition& rest);

  PeelOrder order_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, BigInt, KeyHash> cache_;
};

/// Process-wide largest-first engine.
BigInt mn_character(const Partition& mu, const Partition& lambda);

}  // namespace evsym

#endif  // EVSYM_MURNAGHAN_NAKAYAMA_HPP
