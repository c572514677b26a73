#include "regpow/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>

#include "regpow/error.hpp"

namespace regpow {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

ResultCache::ResultCache(fs::path dir, std::string version, double audit_rate, std::optional<std::uint64_t> seed)
    : dir_(std::move(dir)),
      version_(std::move(version)),
      audit_rate_(audit_rate),
      rng_(seed ? *seed : std::random_device{}()) {}

std::string ResultCache::make_key(const std::string& canonical, const std::string& operation,
                                  const json& parameters) const {
  const json material = {
      {"ideal", canonical}, {"operation", operation}, {"parameters", parameters}, {"engine", version_}};
  return sha256_hex(material.dump());
}

fs::path ResultCache::entry_path(const std::string& key) const { return dir_ / key.substr(0, 2) / (key + ".json"); }

std::optional<json> ResultCache::get(const std::string& key) {
  const fs::path path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ++stats_.misses;
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  const json entry = json::parse(buf.str(), nullptr, false);
  bool ok = !entry.is_discarded() && entry.is_object() && entry.contains("value") && entry.contains("checksum") &&
            entry.value("key", "") == key && entry.value("engine", "") == version_;
  if (ok) ok = entry["checksum"] == sha256_hex(entry["value"].dump());
  if (!ok) {
    ++stats_.corrupt;
    ++stats_.misses;
    warnings_.push_back("discarded corrupt cache entry " + path.string());
    std::error_code ec;
    fs::remove(path, ec);
    return std::nullopt;
  }
  ++stats_.hits;
  return entry["value"];
}

void ResultCache::put(const std::string& key, const json& value) {
  static std::atomic<unsigned> counter{0};
  const fs::path path = entry_path(key);
  fs::create_directories(path.parent_path());
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  const json entry = {{"key", key},
                      {"engine", version_},
                      {"checksum", sha256_hex(value.dump())},
                      {"created_unix", now},
                      {"value", value}};
  const fs::path tmp = path.parent_path() / ("." + key + "." + std::to_string(::getpid()) + "." +
                                             std::to_string(counter.fetch_add(1)) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache entry " + tmp.string());
    out << entry.dump();
    out.flush();
    if (!out) throw Error("cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, path);
}

json ResultCache::get_or_compute(const std::string& key, const std::function<json()>& compute) {
  if (auto cached = get(key)) {
    if (std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < audit_rate_) {
      ++stats_.audits;
      json fresh = compute();
      if (fresh.dump() != cached->dump()) {
        ++stats_.audit_mismatches;
        warnings_.push_back("cache audit mismatch for key " + key + "; entry replaced");
        put(key, fresh);
        return fresh;
      }
    }
    return *cached;
  }
  json fresh = compute();
  put(key, fresh);
  return fresh;
}

}  // namespace regpow
