#include "evsym/kostka_cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace evsym {

namespace {

constexpr const char* kFormatTag = "evsym.kostka";

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

nlohmann::json matrix_to_json(const SparseMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size; ++i) {
    for (const auto& [j, v] : m.rows[i]) out.push_back({i, j, v.get_str()});
  }
  return out;
}

SparseMatrix matrix_from_json(const nlohmann::json& doc, std::size_t size) {
  SparseMatrix m{size, std::vector<SparseMatrix::Row>(size)};
  for (const auto& triple : doc) {
    const auto i = triple.at(0).get<std::size_t>();
    const auto j = triple.at(1).get<std::size_t>();
    if (i >= size || j >= size) throw ContractViolation("kostka cache: index out of range");
    BigInt v;
    if (v.set_str(triple.at(2).get<std::string>(), 10) != 0 || v == 0) {
      throw ContractViolation("kostka cache: bad matrix entry");
    }
    auto& row = m.rows[i];
    if (!row.empty() && row.back().first >= j) throw ContractViolation("kostka cache: unsorted row");
    row.emplace_back(j, std::move(v));
  }
  return m;
}

nlohmann::json payload(const KostkaSystem& system) {
  nlohmann::json order = nlohmann::json::array();
  for (const Partition& p : system.order()) order.push_back(p.part_vector());
  return {
      {"format", kFormatTag},
      {"version", kKostkaCacheVersion},
      {"degree", system.degree()},
      {"order", std::move(order)},
      {"kostka", matrix_to_json(system.kostka_matrix())},
      {"inverse", matrix_to_json(system.inverse_matrix())},
  };
}

}  // namespace

nlohmann::json kostka_system_to_json(const KostkaSystem& system) {
  nlohmann::json doc = payload(system);
  doc["checksum"] = fnv1a_hex(doc.dump());
  return doc;
}

KostkaSystem kostka_system_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("format").get<std::string>() != kFormatTag || doc.at("version").get<int>() != kKostkaCacheVersion) {
      throw ContractViolation("kostka cache: unsupported format or version");
    }
    nlohmann::json body = doc;
    body.erase("checksum");
    if (fnv1a_hex(body.dump()) != doc.at("checksum").get<std::string>()) {
      throw ContractViolation("kostka cache: checksum mismatch");
    }
    const int degree = doc.at("degree").get<int>();
    std::vector<Partition> order;
    for (const auto& parts : doc.at("order")) order.emplace_back(parts.get<std::vector<int>>());
    if (order != partitions_of(degree, Limits{std::max(degree, 0)})) {
      throw ContractViolation("kostka cache: partition order does not match degree");
    }
    const std::size_t n = order.size();
    SparseMatrix k = matrix_from_json(doc.at("kostka"), n);
    SparseMatrix inverse = matrix_from_json(doc.at("inverse"), n);
    return KostkaSystem(degree, std::move(order), std::move(k), std::move(inverse));
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("kostka cache: ") + e.what());
  } catch (const CrossCheckFailure& e) {
    throw ContractViolation(std::string("kostka cache: ") + e.what());
  }
}

std::filesystem::path kostka_cache_path(const std::filesystem::path& dir, int degree) {
  return dir / fmt::format("kostka-v{}-n{}.json", kKostkaCacheVersion, degree);
}

std::optional<KostkaSystem> load_kostka_cache(const std::filesystem::path& dir, int degree) {
  std::ifstream in(kostka_cache_path(dir, degree));
  if (!in) return std::nullopt;
  try {
    auto doc = nlohmann::json::parse(in);
    KostkaSystem system = kostka_system_from_json(doc);
    if (system.degree() != degree) return std::nullopt;
    return system;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const ContractViolation&) {
    return std::nullopt;
  }
}

bool save_kostka_cache(const std::filesystem::path& dir, const KostkaSystem& system) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return false;
  const auto target = kostka_cache_path(dir, system.degree());
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) return false;
    out << kostka_system_to_json(system).dump();
    if (!out) return false;
  }
  std::filesystem::rename(temp, target, ec);
  return !ec;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* value = std::getenv(kCacheDirEnv);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

}  // namespace evsym
