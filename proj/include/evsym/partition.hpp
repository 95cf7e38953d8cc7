#ifndef EVSYM_PARTITION_HPP
#define EVSYM_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evsym/config.hpp"

namespace evsym {

/// An integer partition: a weakly decreasing list of positive parts.
///
/// The default-constructed value is the empty partition of 0. Ordering via
/// operator<=> is plain lexicographic on the part list; the canonical
/// enumeration order used throughout the library is the reverse of it
/// (see ReverseLex), which refines dominance.
class Partition {
 public:
  Partition() = default;

  /// Throws ContractViolation unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts decreasingly and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& part_vector() const { return parts_; }
  int degree() const { return degree_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

  /// i-th part, 0-based, padded with zeros past the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Distinct part values with their repetition counts, largest value first.
  std::vector<std::pair<int, int>> multiplicities() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Canonical order: reverse lexicographic, so (4) < (3,1) < (2,2) < ...
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

// "4,2,2,1"; the empty partition renders as "()".
std::string to_string(const Partition& p);
// "4,2^2,1"
std::string to_exponent_string(const Partition& p);
// "[4^1 2^2 1^1]", the bracket style of printed character tables.
std::string to_bracket_string(const Partition& p);

/// Accepts "4,2,2,1", "4,2^2,1", "()" and "" (empty). Whitespace is ignored.
/// Parts may be given in any order. Throws ContractViolation on bad input.
Partition parse_partition(std::string_view text);

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> partitions_of(int n, const Limits& limits = {});

Partition conjugate(const Partition& p);

/// λ ⊵ μ. Throws ContractViolation when the degrees differ.
bool dominates(const Partition& lambda, const Partition& mu);

inline constexpr int kUnboundedParts = std::numeric_limits<int>::max();

/// Partitions of m into at most max_parts even parts. Empty for odd m.
std::vector<Partition> restricted_even_rows(int m, int max_parts, const Limits& limits = {});

/// Partitions of m with at most max_parts parts whose conjugate has only even
/// parts, i.e. every distinct part value occurs an even number of times.
std::vector<Partition> restricted_even_cols(int m, int max_parts, const Limits& limits = {});

/// Order of the centralizer of a permutation with cycle type p.
BigInt z_value(const Partition& p);

/// One distinct element of Ev(λ).
struct EvEntry {
  Partition partition;
  std::uint64_t multiplicity = 0;
  int sign() const { return partition.length() % 2 == 0 ? 1 : -1; }
};

/// The multiset Ev(λ): every way of replacing each part k by 2k or by k,k,
/// collapsed into distinct partitions with multiplicities.
struct EvMultiset {
  Partition source;
  std::vector<EvEntry> entries;  // canonical order

  std::uint64_t total_multiplicity() const;
};

inline constexpr int kEvEnumerationThreshold = 20;

/// Materializes Ev(λ) by walking all 2^ℓ(λ) doubling masks when ℓ(λ) is at
/// most `enumeration_threshold`, and by the binomial-product formula otherwise.
EvMultiset ev_multiset(const Partition& lambda, int enumeration_threshold = kEvEnumerationThreshold);

/// Ev(λ) from the closed form: for each part value k with count c, choosing
/// j of the copies to double contributes C(c, j).
EvMultiset ev_multiset_by_formula(const Partition& lambda);

}  // namespace evsym

template <>
struct std::hash<evsym::Partition> {
  std::size_t operator()(const evsym::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // EVSYM_PARTITION_HPP
