#include "evsym/murnaghan_nakayama.hpp"

#include <algorithm>
#include <mutex>

namespace evsym {

std::vector<RimHookRemoval> rim_hooks(const Partition& mu, int k) {
  if (k < 1 || k > mu.degree()) {
    throw ContractViolation("rim_hooks: strip size " + std::to_string(k) + " outside [1, " +
                            std::to_string(mu.degree()) + "]");
  }
  // Beta numbers β_i = μ_i + (ℓ − 1 − i). Removing a k-strip moves one bead
  // from β to β − k onto an empty position; the strip's height is the
  // number of beads jumped over.
  const int len = mu.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)] + len - 1 - i;

  std::vector<RimHookRemoval> out;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    const int height = static_cast<int>(std::count_if(beta.begin(), beta.end(), [&](int b) { return b > to && b < from; }));

    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int r = 0; r < len; ++r) parts.push_back(moved[static_cast<std::size_t>(r)] - (len - 1 - r));
    out.push_back({Partition::from_unsorted(std::move(parts)), height});
  }
  std::sort(out.begin(), out.end(), [](const RimHookRemoval& a, const RimHookRemoval& b) {
    return ReverseLex{}(a.remaining, b.remaining);
  });
  return out;
}

BigInt MnCharacterEngine::character(const Partition& mu, const Partition& lambda) {
  if (mu.degree() != lambda.degree()) {
    throw ContractViolation("mn_character: |" + to_string(mu) + "| != |" + to_string(lambda) + "|");
  }
  return evaluate(mu, lambda);
}

std::size_t MnCharacterEngine::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

BigInt MnCharacterEngine::evaluate(const Partition& mu, const Partition& rest) {
  if (rest.empty()) return 1;  // χ^∅_∅; degrees already match
  if (mu.length() == 1) return 1;  // trivial character
  Key key{mu, rest};
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  const auto& parts = rest.part_vector();
  std::vector<int> tail;
  int strip;
  if (order_ == PeelOrder::LargestFirst) {
    strip = parts.front();
    tail.assign(parts.begin() + 1, parts.end());
  } else {
    strip = parts.back();
    tail.assign(parts.begin(), parts.end() - 1);
  }
  const Partition remaining_cycles(std::move(tail));

  BigInt value = 0;
  for (const RimHookRemoval& hook : rim_hooks(mu, strip)) {
    BigInt sub = evaluate(hook.remaining, remaining_cycles);
    if (hook.height % 2 == 0) {
      value += sub;
    } else {
      value -= sub;
    }
  }

  std::unique_lock lock(mutex_);
  cache_.try_emplace(std::move(key), value);
  return value;
}

BigInt mn_character(const Partition& mu, const Partition& lambda) {
  static MnCharacterEngine engine;
  return engine.character(mu, lambda);
}

}  // namespace evsym
