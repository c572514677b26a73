#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "regpow/report.hpp"

namespace regpow {

/// Hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

/// Persistent content-addressed store of JSON results.
///
/// Entries live at dir/ab/abcdef....json and are written through a temp
/// file and rename, so concurrent readers see the old or the new file. Each
/// entry carries a checksum of its value; a mismatch discards the entry.
class ResultCache {
 public:
  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t corrupt = 0;
    std::size_t audits = 0;
    std::size_t audit_mismatches = 0;
  };

  explicit ResultCache(std::filesystem::path dir, std::string version = engine_version, double audit_rate = 0.1,
                       std::optional<std::uint64_t> seed = std::nullopt);

  /// Key over canonical ideal text, operation, parameters and engine version.
  std::string make_key(const std::string& canonical, const std::string& operation, const json& parameters) const;

  std::optional<json> get(const std::string& key);
  void put(const std::string& key, const json& value);

  /// Cached value or `compute()`, storing fresh results. A random fraction
  /// of hits is recomputed and compared; a mismatch is reported and the
  /// fresh value replaces the entry.
  json get_or_compute(const std::string& key, const std::function<json()>& compute);

  const Stats& stats() const { return stats_; }
  /// Human-readable notices (corruption, audit mismatches).
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
  double audit_rate_;
  std::mt19937_64 rng_;
  Stats stats_;
  std::vector<std::string> warnings_;
};

}  // namespace regpow
