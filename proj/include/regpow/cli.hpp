#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "regpow/parallel.hpp"

namespace regpow::cli {

enum ExitCode : int { ok = 0, verdict_failure = 1, usage = 2, resource_cap = 3 };

/// Effective settings after merging flags > environment > config file > defaults.
struct Config {
  std::filesystem::path out_dir = "out";
  std::filesystem::path cache_dir = ".regpow-cache";
  bool use_cache = true;
  int threads = 0;
  double audit_rate = 0.1;
  Limits limits;
};

/// Environment variables consulted by the CLI.
inline constexpr const char* env_cache_dir = "REGPOW_CACHE_DIR";
inline constexpr const char* env_threads = "REGPOW_THREADS";
inline constexpr const char* env_enum_cap = "REGPOW_ENUM_CAP";
inline constexpr const char* env_lcm_cap = "REGPOW_LCM_CAP";
inline constexpr const char* env_config = "REGPOW_CONFIG";
inline constexpr const char* env_audit_rate = "REGPOW_AUDIT_RATE";

/// Runs one command line (without the program name). Reports go to the
/// configured output directory, the report JSON to `out`, diagnostics as
/// JSON lines to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace regpow::cli
