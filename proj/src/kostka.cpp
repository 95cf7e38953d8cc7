#include "evsym/schur_transition.hpp"

#include <algorithm>
#include <thread>

#include "evsym/kostka_cache.hpp"

namespace evsym {

namespace {

struct ShapeContent {
  Partition shape;
  Partition content;
  friend bool operator==(const ShapeContent&, const ShapeContent&) = default;
};

struct ShapeContentHash {
  std::size_t operator()(const ShapeContent& k) const noexcept {
    std::hash<Partition> h;
    return h(k.shape) * 0x9e3779b97f4a7c15ULL ^ h(k.content);
  }
};

// Write-once memo: a racing duplicate computes the same value, so the first
// insertion wins and later ones are dropped.
class KostkaMemo {
 public:
  std::optional<BigInt> find(const ShapeContent& key) {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(ShapeContent key, const BigInt& value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(std::move(key), value);
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<ShapeContent, BigInt, ShapeContentHash> table_;
};

KostkaMemo& memo() {
  static KostkaMemo instance;
  return instance;
}

// Fillings are built one label at a time: the cells holding the largest
// label form a horizontal strip λ/ν (rows weakly increase, columns strictly
// increase), so stripping it leaves a smaller semistandard tableau.
BigInt count_tableaux(const std::vector<int>& shape, std::span<const int> content);

void strip_rows(const std::vector<int>& shape, std::span<const int> rest, std::size_t row,
                int to_remove, std::vector<int>& inner, BigInt& total) {
  if (row == shape.size()) {
    if (to_remove == 0) {
      std::vector<int> trimmed = inner;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      total += count_tableaux(trimmed, rest);
    }
    return;
  }
  const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
  const int slack = shape[row] - below;
  for (int k = std::min(slack, to_remove); k >= 0; --k) {
    inner[row] = shape[row] - k;
    strip_rows(shape, rest, row + 1, to_remove - k, inner, total);
  }
  inner[row] = shape[row];
}

BigInt count_tableaux(const std::vector<int>& shape, std::span<const int> content) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  if (shape.size() > content.size()) return 0;
  if (shape.empty()) return 0;

  ShapeContent key{Partition(shape), Partition(std::vector<int>(content.begin(), content.end()))};
  if (auto hit = memo().find(key)) return *hit;

  BigInt total = 0;
  std::vector<int> inner = shape;
  strip_rows(shape, content.first(content.size() - 1), 0, content.back(), inner, total);
  memo().insert(std::move(key), total);
  return total;
}

}  // namespace

BigInt kostka(const Partition& shape, const Partition& content) {
  if (shape.degree() != content.degree()) {
    throw ContractViolation("kostka: shape and content have different degrees");
  }
  if (shape.empty()) return 1;
  return count_tableaux(shape.part_vector(), content.parts());
}

BigInt SparseMatrix::at(std::size_t i, std::size_t j) const {
  const Row& row = rows.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& e, std::size_t col) { return e.first < col; });
  return it != row.end() && it->first == j ? it->second : BigInt(0);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const Row& r : rows) n += r.size();
  return n;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t{size, std::vector<Row>(size)};
  for (std::size_t i = 0; i < size; ++i) {
    for (const auto& [j, v] : rows[i]) t.rows[j].emplace_back(i, v);
  }
  return t;
}

KostkaSystem::KostkaSystem(int degree, std::vector<Partition> order, SparseMatrix kostka, SparseMatrix inverse)
    : degree_(degree), order_(std::move(order)), kostka_(std::move(kostka)), inverse_(std::move(inverse)) {
  const std::size_t n = order_.size();
  if (kostka_.size != n || kostka_.rows.size() != n || inverse_.size != n || inverse_.rows.size() != n) {
    throw ContractViolation("KostkaSystem: matrix size does not match the partition order");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (order_[i].degree() != degree_) throw ContractViolation("KostkaSystem: order has wrong degree");
    if (i > 0 && !ReverseLex{}(order_[i - 1], order_[i])) {
      throw ContractViolation("KostkaSystem: order is not canonical");
    }
    index_.emplace(order_[i], i);
  }
  auto check_triangular = [&](const SparseMatrix& m, const char* name) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = m.rows[i];
      if (row.empty() || row.front().first != i || row.front().second != 1) {
        throw CrossCheckFailure(std::string(name) + " is not unitriangular at row " + to_string(order_[i]));
      }
      for (const auto& [j, v] : row) {
        if (j >= n || v == 0 || !dominates(order_[i], order_[j])) {
          throw CrossCheckFailure(std::string(name) + " entry outside dominance support at (" +
                                  to_string(order_[i]) + ", " + to_string(order_[j < n ? j : i]) + ")");
        }
      }
    }
  };
  check_triangular(kostka_, "Kostka matrix");
  check_triangular(inverse_, "inverse Kostka matrix");
  kostka_columns_ = kostka_.transposed();
}

std::size_t KostkaSystem::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw ContractViolation("partition " + to_string(p) + " is not of degree " + std::to_string(degree_));
  }
  return it->second;
}

MonomialExpansion KostkaSystem::schur_to_monomial(const Partition& mu) const {
  MonomialExpansion out(degree_);
  for (const auto& [j, v] : kostka_.rows[index_of(mu)]) out.add_term(order_[j], v);
  return out;
}

SchurCoeffs KostkaSystem::monomial_to_schur(const MonomialExpansion& f) const {
  if (f.degree() != degree_) {
    throw ContractViolation("monomial_to_schur: expansion of degree " + std::to_string(f.degree()) +
                            " against a degree " + std::to_string(degree_) + " system");
  }
  // c_μ = Σ_ν d_ν K[ν][μ] with K[ν][μ] ≠ 0 only for ν at or before μ.
  const std::size_t n = order_.size();
  std::vector<BigInt> d(n);
  for (const auto& [lambda, c] : f.terms()) d[index_of(lambda)] = c;
  SchurCoeffs out{degree_, {}};
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (const auto& [nu, k] : kostka_columns_.rows[mu]) {
      if (nu == mu) break;
      if (d[nu] != 0) d[mu] -= d[nu] * k;
    }
    if (d[mu] != 0) out.terms.emplace(order_[mu], d[mu]);
  }
  return out;
}

BigInt KostkaSystem::character(const Partition& mu, const Partition& lambda) const {
  if (mu.degree() != lambda.degree()) throw ContractViolation("character: unequal degrees");
  index_of(mu);
  return monomial_to_schur(power_to_monomial(lambda, Limits{degree_})).coefficient(mu);
}

bool KostkaSystem::inverse_is_exact() const {
  const std::size_t n = order_.size();
  const SparseMatrix inverse_columns = inverse_.transposed();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Sparse dot product of row i of K and column j of K_inv.
      const auto& a = kostka_.rows[i];
      const auto& b = inverse_columns.rows[j];
      BigInt sum = 0;
      auto ia = a.begin();
      auto ib = b.begin();
      while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
          ++ia;
        } else if (ib->first < ia->first) {
          ++ib;
        } else {
          sum += ia->second * ib->second;
          ++ia;
          ++ib;
        }
      }
      if (sum != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

namespace {

SparseMatrix invert_unitriangular(const SparseMatrix& k) {
  const std::size_t n = k.size;
  SparseMatrix inverse{n, std::vector<SparseMatrix::Row>(n)};
  std::vector<BigInt> column(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(column.begin(), column.end(), BigInt(0));
    column[j] = 1;
    for (std::size_t i = j; i-- > 0;) {
      BigInt sum = 0;
      for (const auto& [c, v] : k.rows[i]) {
        if (c <= i) continue;
        if (c > j) break;
        if (column[c] != 0) sum += v * column[c];
      }
      column[i] = -sum;
    }
    for (std::size_t i = 0; i <= j; ++i) {
      if (column[i] != 0) inverse.rows[i].emplace_back(j, column[i]);
    }
  }
  return inverse;
}

}  // namespace

KostkaSystem compute_kostka_system(int n, const Limits& limits, unsigned threads) {
  if (n < 0) throw ContractViolation("build_kostka_system: negative degree");
  limits.check_degree(n, "build_kostka_system");
  std::vector<Partition> order = partitions_of(n, limits);
  const std::size_t size = order.size();
  SparseMatrix k{size, std::vector<SparseMatrix::Row>(size)};

  auto fill_row = [&](std::size_t i) {
    // Later partitions in the order are lexicographically smaller, so the
    // lower triangle cannot be dominated and is zero.
    for (std::size_t j = i; j < size; ++j) {
      BigInt v = kostka(order[i], order[j]);
      if (v != 0) k.rows[i].emplace_back(j, std::move(v));
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(size)));
  if (workers == 1) {
    for (std::size_t i = 0; i < size; ++i) fill_row(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < size; i += workers) fill_row(i);
      });
    }
  }

  SparseMatrix inverse = invert_unitriangular(k);
  return KostkaSystem(n, std::move(order), std::move(k), std::move(inverse));
}

KostkaSystem build_kostka_system(int n, const KostkaBuildOptions& options) {
  options.limits.check_degree(n, "build_kostka_system");
  if (options.cache_dir) {
    if (auto cached = load_kostka_cache(*options.cache_dir, n)) return std::move(*cached);
  }
  KostkaSystem system = compute_kostka_system(n, options.limits, options.threads);
  if (!system.inverse_is_exact()) {
    throw CrossCheckFailure("K * K_inv is not the identity at degree " + std::to_string(n));
  }
  if (options.cache_dir) save_kostka_cache(*options.cache_dir, system);
  return system;
}

BigInt character_via_schur(const KostkaSystem& system, const Partition& mu, const Partition& lambda) {
  return system.character(mu, lambda);
}

std::shared_ptr<const KostkaSystem> KostkaSystemStore::get(int n) {
  std::lock_guard lock(mutex_);
  auto it = systems_.find(n);
  if (it != systems_.end()) return it->second;
  auto system = std::make_shared<const KostkaSystem>(build_kostka_system(n, options_));
  systems_.emplace(n, system);
  return system;
}

std::shared_ptr<const SchurCoeffs> PowerSumSchurCache::power_sum(const Partition& lambda) {
  {
    std::shared_lock lock(mutex_);
    auto it = columns_.find(lambda);
    if (it != columns_.end()) return it->second;
  }
  if (lambda.degree() != system_->degree()) {
    throw ContractViolation("power_sum: partition " + to_string(lambda) + " does not match the system degree");
  }
  auto column = std::make_shared<const SchurCoeffs>(
      system_->monomial_to_schur(power_to_monomial(lambda, limits_)));
  std::unique_lock lock(mutex_);
  return columns_.try_emplace(lambda, std::move(column)).first->second;
}

BigInt PowerSumSchurCache::character(const Partition& mu, const Partition& lambda) {
  if (mu.degree() != lambda.degree()) throw ContractViolation("character: unequal degrees");
  system_->index_of(mu);
  return power_sum(lambda)->coefficient(mu);
}

}  // namespace evsym
