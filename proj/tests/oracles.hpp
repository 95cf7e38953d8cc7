// Independent brute-force routes used only to compute or check expected
// values. Nothing here calls the library's algorithms under test.
#ifndef EVSYM_TESTS_ORACLES_HPP
#define EVSYM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "evsym/dense_polynomial.hpp"
#include "evsym/partition.hpp"

namespace evsym::oracle {

// p(n) by Euler's pentagonal number recurrence.
inline std::vector<std::int64_t> partition_counts(int up_to) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(up_to + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= up_to; ++n) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

// Every weakly decreasing positive vector summing to n, generated by brute
// force over compositions and deduplicated through a set.
inline std::set<std::vector<int>> partitions_by_compositions(int n) {
  std::set<std::vector<int>> out;
  if (n == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  // Each composition of n corresponds to a subset of the n−1 gaps.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int gap = 0; gap < n - 1; ++gap) {
      if (mask & (1u << gap)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.insert(parts);
  }
  return out;
}

// Conjugate from the Young diagram cell set.
inline std::vector<int> column_lengths(const std::vector<int>& parts) {
  std::vector<int> cols;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      if (static_cast<std::size_t>(c) >= cols.size()) cols.push_back(0);
      ++cols[static_cast<std::size_t>(c)];
    }
  }
  return cols;
}

// z_λ as n! / |conjugacy class|, counting cycle types over all of S_n.
inline std::map<std::vector<int>, std::int64_t> class_sizes(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, std::int64_t> sizes;
  do {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    ++sizes[type];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sizes;
}

// Semistandard tableaux counted cell by cell in reading order.
class TableauCounter {
 public:
  TableauCounter(const std::vector<int>& shape, const std::vector<int>& content) : shape_(shape), remaining_(content) {
    for (std::size_t r = 0; r < shape.size(); ++r) {
      grid_.emplace_back(static_cast<std::size_t>(shape[r]), 0);
      for (int c = 0; c < shape[r]; ++c) cells_.emplace_back(r, c);
    }
  }

  std::int64_t count() { return fill(0); }

 private:
  std::int64_t fill(std::size_t k) {
    if (k == cells_.size()) return 1;
    auto [r, c] = cells_[k];
    std::int64_t total = 0;
    for (int label = 1; label <= static_cast<int>(remaining_.size()); ++label) {
      if (remaining_[static_cast<std::size_t>(label - 1)] == 0) continue;
      if (c > 0 && grid_[r][static_cast<std::size_t>(c - 1)] > label) continue;
      if (r > 0 && grid_[r - 1][static_cast<std::size_t>(c)] >= label) continue;
      grid_[r][static_cast<std::size_t>(c)] = label;
      --remaining_[static_cast<std::size_t>(label - 1)];
      total += fill(k + 1);
      ++remaining_[static_cast<std::size_t>(label - 1)];
    }
    grid_[r][static_cast<std::size_t>(c)] = 0;
    return total;
  }

  std::vector<int> shape_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> grid_;
  std::vector<std::pair<std::size_t, int>> cells_;
};

inline std::int64_t count_ssyt(const Partition& shape, const Partition& content) {
  return TableauCounter(shape.part_vector(), content.part_vector()).count();
}

// Border strips by brute force: every inner partition ν ⊆ μ with |μ/ν| = k
// whose skew cells are edge-connected and contain no 2×2 block.
struct Strip {
  std::vector<int> remaining;
  int height;
  bool operator<(const Strip& o) const { return std::tie(remaining, height) < std::tie(o.remaining, o.height); }
  bool operator==(const Strip& o) const { return remaining == o.remaining && height == o.height; }
};

inline void inner_shapes(const std::vector<int>& outer, std::size_t row, int bound, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (row == outer.size()) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= std::min(bound, outer[row]); ++x) {
    cur.push_back(x);
    inner_shapes(outer, row + 1, x, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Strip> border_strips(const Partition& mu, int k) {
  const auto& outer = mu.part_vector();
  std::vector<std::vector<int>> inners;
  std::vector<int> cur;
  inner_shapes(outer, 0, outer.empty() ? 0 : outer[0], cur, inners);
  std::vector<Strip> out;
  for (const auto& inner : inners) {
    std::set<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < outer.size(); ++r) {
      for (int c = inner[r]; c < outer[r]; ++c) cells.emplace(static_cast<int>(r), c);
    }
    if (static_cast<int>(cells.size()) != k) continue;
    bool square = false;
    for (auto [r, c] : cells) {
      if (cells.count({r + 1, c}) && cells.count({r, c + 1}) && cells.count({r + 1, c + 1})) square = true;
    }
    if (square) continue;
    std::set<std::pair<int, int>> seen{*cells.begin()};
    std::queue<std::pair<int, int>> q;
    q.push(*cells.begin());
    while (!q.empty()) {
      auto [r, c] = q.front();
      q.pop();
      for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        std::pair<int, int> next{r + dr, c + dc};
        if (cells.count(next) && !seen.count(next)) {
          seen.insert(next);
          q.push(next);
        }
      }
    }
    if (seen.size() != cells.size()) continue;
    std::set<int> rows;
    for (auto [r, c] : cells) rows.insert(r);
    std::vector<int> rem = inner;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    out.push_back({rem, static_cast<int>(rows.size()) - 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// f^μ by the hook length formula.
inline BigInt hook_length_count(const Partition& mu) {
  BigInt numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(mu.degree()));
  const auto cols = column_lengths(mu.part_vector());
  BigInt hooks = 1;
  for (int r = 0; r < mu.length(); ++r) {
    for (int c = 0; c < mu[static_cast<std::size_t>(r)]; ++c) {
      hooks *= (mu[static_cast<std::size_t>(r)] - c - 1) + (cols[static_cast<std::size_t>(c)] - r - 1) + 1;
    }
  }
  return numerator / hooks;
}

// Dense polynomial of p_k or m_λ built directly from variables, without the
// monomial-basis code.
inline DensePolynomial dense_power_sum(int k, int vars) {
  DensePolynomial out(vars);
  for (int i = 0; i < vars; ++i) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = k;
    out.add_term(e, 1);
  }
  return out;
}

inline DensePolynomial dense_one(int vars) {
  DensePolynomial out(vars);
  out.add_term(std::vector<int>(static_cast<std::size_t>(vars), 0), 1);
  return out;
}

inline DensePolynomial dense_power_product(const std::vector<int>& parts, int vars) {
  DensePolynomial out = dense_one(vars);
  for (int k : parts) out = out * dense_power_sum(k, vars);
  return out;
}

// m_{(a,a)} = Σ_{i<j} x_i^a x_j^a.
inline DensePolynomial dense_two_row(int a, int vars) {
  DensePolynomial out(vars);
  for (int i = 0; i < vars; ++i) {
    for (int j = i + 1; j < vars; ++j) {
      std::vector<int> e(static_cast<std::size_t>(vars), 0);
      e[static_cast<std::size_t>(i)] = a;
      e[static_cast<std::size_t>(j)] = a;
      out.add_term(e, 1);
    }
  }
  return out;
}

}  // namespace evsym::oracle

#endif  // EVSYM_TESTS_ORACLES_HPP
