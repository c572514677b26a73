#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "regpow/betti.hpp"
#include "regpow/experiments.hpp"
#include "regpow/feasibility.hpp"
#include "regpow/ideal.hpp"
#include "regpow/stanley_reisner.hpp"

namespace regpow {

using json = nlohmann::json;

inline constexpr const char* engine_name = "regpow";
/// Part of every cache key; bump when any numeric result could change.
inline constexpr const char* engine_version = "1.0.0";

json to_json(const Monomial& m);
json to_json(const MonomialIdeal& I);
json to_json(const RationalVector& v);
json to_json(const PrimeList& primes);
json to_json(const BettiTable& table);
json to_json(const RegularityValue& v);
json to_json(const LinearFit& fit);
json to_json(const RegularitySequence& seq);
json to_json(const ContainmentReport& report);
json to_json(const GreedyTrace& trace);
json to_json(const RatioScan& scan);
json to_json(const BelReport& report);

RegularityValue regularity_from_json(const json& j);
/// to_json plus a flag set when module and sheaf regularity differ.
json regularity_report(const RegularityValue& v);

/// The common frame of every report. `status` is "ok", "violated" or
/// "truncated".
json envelope(const std::string& command, const json& parameters, const json& ideal, const json& result,
              const std::string& status);

/// Lossy tabular view of a result.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 quoting, "\n" line ends.
std::string render_csv(const CsvTable& table);

CsvTable generators_csv(const MonomialIdeal& I);
CsvTable betti_csv(const BettiTable& table);
CsvTable sequence_csv(const RegularitySequence& seq);
CsvTable containment_csv(std::span<const ContainmentReport> reports);
CsvTable greedy_csv(const GreedyTrace& trace);
CsvTable bel_csv(const BelReport& report);

}  // namespace regpow
