#ifndef EVSYM_KOSTKA_CACHE_HPP
#define EVSYM_KOSTKA_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "evsym/schur_transition.hpp"

namespace evsym {

inline constexpr int kKostkaCacheVersion = 1;
inline constexpr const char* kCacheDirEnv = "EVSYM_CACHE_DIR";

/// Serialized system: degree, order, both matrices as sparse
/// [row, column, "decimal"] triples, and an FNV-1a checksum of the rest.
nlohmann::json kostka_system_to_json(const KostkaSystem& system);

/// Throws ContractViolation on malformed input, bad checksum or a version
/// mismatch.
KostkaSystem kostka_system_from_json(const nlohmann::json& doc);

std::filesystem::path kostka_cache_path(const std::filesystem::path& dir, int degree);

/// Empty when the file is missing, unreadable, corrupt or for another degree.
std::optional<KostkaSystem> load_kostka_cache(const std::filesystem::path& dir, int degree);

/// Writes atomically (temporary file + rename). Returns false on I/O failure.
bool save_kostka_cache(const std::filesystem::path& dir, const KostkaSystem& system);

/// Directory named by EVSYM_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace evsym

#endif  // EVSYM_KOSTKA_CACHE_HPP
