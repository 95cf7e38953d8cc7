#include "evsym/monomial.hpp"

#include <algorithm>

namespace evsym {

MonomialExpansion::MonomialExpansion(int degree) : degree_(degree) {
  if (degree < 0) throw ContractViolation("MonomialExpansion: negative degree");
}

MonomialExpansion MonomialExpansion::basis(const Partition& lambda) {
  MonomialExpansion f(lambda.degree());
  f.add_term(lambda, 1);
  return f;
}

BigInt MonomialExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MonomialExpansion::add_term(const Partition& lambda, const BigInt& c) {
  if (lambda.degree() != degree_) {
    throw ContractViolation("MonomialExpansion: term m[" + to_string(lambda) + "] has degree " +
                            std::to_string(lambda.degree()) + ", expected " + std::to_string(degree_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MonomialExpansion& MonomialExpansion::operator+=(const MonomialExpansion& other) {
  if (other.degree_ != degree_) throw ContractViolation("MonomialExpansion: adding unequal degrees");
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator-=(const MonomialExpansion& other) {
  if (other.degree_ != degree_) throw ContractViolation("MonomialExpansion: subtracting unequal degrees");
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= scalar;
  return *this;
}

namespace {

BigInt factorial(int k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// ∏ over distinct values (zero included, padded to `width`) of count!.
BigInt stabilizer_order(const Partition& p, int width) {
  BigInt out = factorial(width - p.length());
  for (auto [value, count] : p.multiplicities()) out *= factorial(count);
  return out;
}

// Positions of the zero-padded vector μ of width L = ℓ(μ) + ℓ(ν), grouped by
// value. β ranges over distinct rearrangements of ν in those positions; since
// positions inside a group are interchangeable only through their count, a
// rearrangement class is fixed by how many copies of each ν value land in
// each group, weighted by the binomial ways to pick the positions.
struct OverlayCounter {
  std::vector<std::pair<int, int>> groups;      // (μ value, size)
  std::vector<std::pair<int, int>> nu_values;   // (ν value, count)
  std::vector<int> free;                        // unfilled positions per group
  std::vector<std::vector<int>> placed;         // placed[g][j]
  std::map<Partition, BigInt> weights;

  void place_value(std::size_t j, const BigInt& weight) {
    if (j == nu_values.size()) {
      record(weight);
      return;
    }
    place_into_group(j, 0, nu_values[j].second, weight);
  }

  void place_into_group(std::size_t j, std::size_t g, int remaining, const BigInt& weight) {
    if (g + 1 == groups.size()) {
      if (remaining > free[g]) return;
      take(j, g, remaining, weight);
      return;
    }
    const int top = std::min(remaining, free[g]);
    for (int n = 0; n <= top; ++n) {
      free[g] -= n;
      placed[g][j] = n;
      place_into_group(j, g + 1, remaining - n, weight * binomial(free[g] + n, n));
      placed[g][j] = 0;
      free[g] += n;
    }
  }

  void take(std::size_t j, std::size_t g, int n, const BigInt& weight) {
    free[g] -= n;
    placed[g][j] = n;
    place_value(j + 1, weight * binomial(free[g] + n, n));
    placed[g][j] = 0;
    free[g] += n;
  }

  void record(const BigInt& weight) {
    std::vector<int> sum;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const int base = groups[g].first;
      int used = 0;
      for (std::size_t j = 0; j < nu_values.size(); ++j) {
        sum.insert(sum.end(), static_cast<std::size_t>(placed[g][j]), base + nu_values[j].first);
        used += placed[g][j];
      }
      sum.insert(sum.end(), static_cast<std::size_t>(groups[g].second - used), base);
    }
    weights[Partition::from_unsorted(std::move(sum))] += weight;
  }
};

}  // namespace

MonomialExpansion monomial_product(const Partition& mu, const Partition& nu) {
  const int width = mu.length() + nu.length();
  MonomialExpansion out(mu.degree() + nu.degree());
  if (nu.empty()) return MonomialExpansion::basis(mu);
  if (mu.empty()) return MonomialExpansion::basis(nu);

  OverlayCounter counter;
  counter.groups = mu.multiplicities();
  counter.groups.emplace_back(0, nu.length());
  counter.nu_values = nu.multiplicities();
  for (auto [value, size] : counter.groups) counter.free.push_back(size);
  counter.placed.assign(counter.groups.size(), std::vector<int>(counter.nu_values.size(), 0));
  counter.place_value(0, 1);

  // Pairs (α, β) summing to λ, over all α in the orbit of μ, equal the
  // fixed-α count scaled by |orbit(μ)| / |orbit(λ)|.
  const BigInt mu_stabilizer = stabilizer_order(mu, width);
  for (const auto& [lambda, weight] : counter.weights) {
    BigInt numerator = weight * stabilizer_order(lambda, width);
    BigInt coefficient;
    mpz_divexact(coefficient.get_mpz_t(), numerator.get_mpz_t(), mu_stabilizer.get_mpz_t());
    out.add_term(lambda, coefficient);
  }
  return out;
}

MonomialExpansion monomial_product(const MonomialExpansion& f, const MonomialExpansion& g) {
  MonomialExpansion out(f.degree() + g.degree());
  for (const auto& [mu, a] : f.terms()) {
    for (const auto& [nu, b] : g.terms()) {
      MonomialExpansion term = monomial_product(mu, nu);
      term *= a * b;
      out += term;
    }
  }
  return out;
}

MonomialExpansion power_to_monomial(const Partition& lambda, const Limits& limits) {
  limits.check_degree(lambda.degree(), "power_to_monomial");
  MonomialExpansion out = MonomialExpansion::basis(Partition{});
  for (int part : lambda.parts()) {
    out = monomial_product(out, MonomialExpansion::basis(Partition{part}));
  }
  return out;
}

MonomialExpansion alternating_ev_sum(const Partition& lambda, const Limits& limits) {
  limits.check_degree(2 * lambda.degree(), "alternating_ev_sum");
  MonomialExpansion out(2 * lambda.degree());
  for (const EvEntry& entry : ev_multiset(lambda).entries) {
    MonomialExpansion term = power_to_monomial(entry.partition, limits);
    term *= BigInt(entry.sign()) * BigInt(static_cast<unsigned long>(entry.multiplicity));
    out += term;
  }
  return out;
}

MonomialExpansion two_row_product(const Partition& lambda, const Limits& limits) {
  limits.check_degree(2 * lambda.degree(), "two_row_product");
  MonomialExpansion out = MonomialExpansion::basis(Partition{});
  for (int part : lambda.parts()) {
    out = monomial_product(out, MonomialExpansion::basis(Partition{part, part}));
  }
  return out;
}

MonomialExpansion theorem_rhs(const Partition& lambda, const Limits& limits) {
  MonomialExpansion out = two_row_product(lambda, limits);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(lambda.length()));
  out *= scale;
  return out;
}

std::string to_text(const MonomialExpansion& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : f.terms()) {
    const bool negative = c < 0;
    BigInt magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.get_str() + '*';
    out += "m[" + (lambda.empty() ? std::string() : to_string(lambda)) + ']';
  }
  return out;
}

}  // namespace evsym
