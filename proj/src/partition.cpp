#include "evsym/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace evsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw ContractViolation("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ContractViolation("partition parts must be weakly decreasing");
    }
    degree_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
    throw ContractViolation("partition parts must be nonnegative");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int x : parts_) {
    if (!out.empty() && out.back().first == x) {
      ++out.back().second;
    } else {
      out.emplace_back(x, 1);
    }
  }
  return out;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "()";
  std::string out;
  for (int x : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string to_exponent_string(const Partition& p) {
  if (p.empty()) return "()";
  std::string out;
  for (auto [value, count] : p.multiplicities()) {
    if (!out.empty()) out += ',';
    out += std::to_string(value);
    if (count > 1) out += '^' + std::to_string(count);
  }
  return out;
}

std::string to_bracket_string(const Partition& p) {
  std::string out = "[";
  bool first = true;
  for (auto [value, count] : p.multiplicities()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(value) + '^' + std::to_string(count);
  }
  return out + "]";
}

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  if (token.empty() || token.size() > 6 ||
      !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ContractViolation("cannot parse partition '" + std::string(whole) + "'");
  }
  return std::stoi(std::string(token));
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty() || compact == "()") return {};

  std::vector<int> parts;
  std::string_view rest = compact;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto caret = item.find('^');
    int value = parse_positive(item.substr(0, caret), text);
    int count = caret == std::string_view::npos ? 1 : parse_positive(item.substr(caret + 1), text);
    if (value == 0 || count == 0) {
      throw ContractViolation("partition parts must be positive: '" + std::string(text) + "'");
    }
    if (parts.size() + static_cast<std::size_t>(count) > 4096) {
      throw ContractViolation("partition too long: '" + std::string(text) + "'");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Partition::from_unsorted(std::move(parts));
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::vector<int>& current,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    enumerate_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Partitions of n with at most max_parts parts, canonical order.
std::vector<Partition> bounded_length_partitions(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_partitions(n, n, current, out);
  std::erase_if(out, [max_parts](const Partition& p) { return p.length() > max_parts; });
  return out;
}

}  // namespace

std::vector<Partition> partitions_of(int n, const Limits& limits) {
  if (n < 0) throw ContractViolation("partitions_of: negative n");
  limits.check_degree(n, "partitions_of");
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_partitions(n, n, current, out);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest_part()), 0);
  for (int x : p.parts()) {
    for (int i = 0; i < x; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.degree() != mu.degree()) {
    throw ContractViolation("dominates: partitions of different degrees");
  }
  int a = 0;
  int b = 0;
  const auto len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < len; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

std::vector<Partition> restricted_even_rows(int m, int max_parts, const Limits& limits) {
  if (max_parts < 1) throw ContractViolation("restricted_even_rows: N must be positive");
  if (m < 0) throw ContractViolation("restricted_even_rows: negative m");
  limits.check_degree(m, "restricted_even_rows");
  if (m % 2 != 0) return {};
  // Doubling every part is a bijection onto the even-part partitions and
  // preserves the canonical order.
  std::vector<Partition> out;
  for (const Partition& half : bounded_length_partitions(m / 2, max_parts)) {
    std::vector<int> parts(half.parts().begin(), half.parts().end());
    for (int& x : parts) x *= 2;
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> restricted_even_cols(int m, int max_parts, const Limits& limits) {
  if (max_parts < 1) throw ContractViolation("restricted_even_cols: N must be positive");
  if (m < 0) throw ContractViolation("restricted_even_cols: negative m");
  limits.check_degree(m, "restricted_even_cols");
  if (m % 2 != 0) return {};
  // Even column lengths means every part value repeats an even number of
  // times, so each such partition is ν ∪ ν for a unique ν ⊢ m/2.
  std::vector<Partition> out;
  for (const Partition& half : bounded_length_partitions(m / 2, max_parts / 2)) {
    std::vector<int> parts;
    for (int x : half.parts()) parts.insert(parts.end(), 2, x);
    out.emplace_back(std::move(parts));
  }
  return out;
}

BigInt z_value(const Partition& p) {
  BigInt z = 1;
  for (auto [value, count] : p.multiplicities()) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(value), static_cast<unsigned long>(count));
    BigInt factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(count));
    z *= power * factorial;
  }
  return z;
}

std::uint64_t EvMultiset::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

namespace {

EvMultiset collect(const Partition& source, const std::map<Partition, std::uint64_t, ReverseLex>& counts) {
  EvMultiset out{source, {}};
  out.entries.reserve(counts.size());
  for (const auto& [partition, multiplicity] : counts) {
    out.entries.push_back({partition, multiplicity});
  }
  return out;
}

}  // namespace

EvMultiset ev_multiset(const Partition& lambda, int enumeration_threshold) {
  const int r = lambda.length();
  if (r > enumeration_threshold || r >= 63) return ev_multiset_by_formula(lambda);

  std::map<Partition, std::uint64_t, ReverseLex> counts;
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(2 * r));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    parts.clear();
    for (int i = 0; i < r; ++i) {
      const int x = lambda.parts()[static_cast<std::size_t>(i)];
      if (mask & (std::uint64_t{1} << i)) {
        parts.push_back(2 * x);
      } else {
        parts.push_back(x);
        parts.push_back(x);
      }
    }
    ++counts[Partition::from_unsorted(parts)];
  }
  return collect(lambda, counts);
}

EvMultiset ev_multiset_by_formula(const Partition& lambda) {
  const auto groups = lambda.multiplicities();
  std::map<Partition, std::uint64_t, ReverseLex> counts;
  std::vector<int> doubled(groups.size(), 0);

  // Odometer over the number of doubled copies per distinct part value.
  while (true) {
    std::vector<int> parts;
    std::uint64_t multiplicity = 1;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      auto [value, count] = groups[g];
      parts.insert(parts.end(), static_cast<std::size_t>(doubled[g]), 2 * value);
      parts.insert(parts.end(), static_cast<std::size_t>(2 * (count - doubled[g])), value);
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(count), static_cast<unsigned long>(doubled[g]));
      multiplicity *= binom.get_ui();
    }
    counts[Partition::from_unsorted(std::move(parts))] += multiplicity;

    std::size_t g = 0;
    while (g < groups.size() && doubled[g] == groups[g].second) {
      doubled[g] = 0;
      ++g;
    }
    if (g == groups.size()) break;
    ++doubled[g];
  }
  return collect(lambda, counts);
}

}  // namespace evsym
