#include "regpow/report.hpp"

#include <sstream>

namespace regpow {

namespace {

std::string opt_to_string(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

json to_json(const Monomial& m) {
  return {{"text", to_string(m)}, {"exponents", std::vector<Exponent>(m.exponents().begin(), m.exponents().end())}};
}

json to_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(to_json(g));
  return {{"nvars", I.nvars()},
          {"canonical", to_string(I)},
          {"generator_count", I.size()},
          {"generators", std::move(gens)}};
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v.entries()) out.push_back(q.get_str());
  return out;
}

json to_json(const PrimeList& primes) {
  json out = json::array();
  for (const auto& p : primes.primes()) {
    json vars = json::array();
    for (auto i : p) vars.push_back(i + 1);
    out.push_back(std::move(vars));
  }
  return out;
}

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& e : table.entries())
    entries.push_back({{"i", e.homological}, {"multidegree", to_json(e.multidegree)}, {"rank", e.rank}});
  json graded = json::array();
  for (const auto& [key, rank] : table.graded())
    graded.push_back({{"i", key.first}, {"degree", key.second}, {"rank", rank}});
  return {{"entries", std::move(entries)},
          {"graded", std::move(graded)},
          {"regularity", table.regularity()},
          {"projective_dimension", table.projective_dimension()}};
}

json to_json(const RegularityValue& v) { return {{"module_reg", v.module_reg}, {"sheaf_reg", v.sheaf_reg}}; }

json regularity_report(const RegularityValue& v) {
  json j = to_json(v);
  // The ideal is not saturated in the boundary degree; both values are kept.
  j["module_sheaf_differ"] = v.module_reg != v.sheaf_reg;
  return j;
}

RegularityValue regularity_from_json(const json& j) {
  RegularityValue v;
  v.module_reg = j.at("module_reg").get<std::int64_t>();
  v.sheaf_reg = j.at("sheaf_reg").get<std::int64_t>();
  return v;
}

json to_json(const LinearFit& fit) {
  return {{"slope", fit.slope}, {"intercept", fit.intercept}, {"onset", fit.onset}};
}

json to_json(const RegularitySequence& seq) {
  json values = json::array();
  for (const auto& v : seq.values)
    values.push_back({{"p", v.p},
                      {"module_reg", v.module_reg},
                      {"sheaf_reg", v.sheaf_reg},
                      {"generators", v.generators},
                      {"max_generator_degree", v.max_generator_degree},
                      {"saturation_max_generator_degree", v.saturation_max_generator_degree}});
  json out = {{"ideal", seq.ideal},
              {"kind", to_string(seq.kind)},
              {"values", std::move(values)},
              {"fit", seq.fit ? to_json(*seq.fit) : json(nullptr)},
              {"truncated", seq.truncated_at.has_value()},
              {"truncated_at", seq.truncated_at ? json(*seq.truncated_at) : json(nullptr)},
              {"truncation_reason", seq.truncation_reason},
              {"observed_offset", seq.observed_offset ? json(*seq.observed_offset) : json(nullptr)},
              {"lower_bound_holds", seq.lower_bound_holds},
              {"upper_bound_holds", seq.upper_bound_holds},
              {"generating_degree_bound_holds", seq.generating_degree_bound_holds},
              {"violated", seq.violated()}};
  return out;
}

json to_json(const ContainmentReport& report) {
  const auto& q = report.query;
  return {{"label", q.label},
          {"left", q.left},
          {"right", q.right},
          {"r", q.r},
          {"m", q.m},
          {"mode", to_string(q.mode)},
          {"expectation", to_string(q.expectation)},
          {"verdict", report.verdict},
          {"witness", report.witness ? to_json(*report.witness) : json(nullptr)},
          {"witness_rechecked", report.witness_rechecked},
          {"left_generators", report.left_generators},
          {"right_generators", report.right_generators},
          {"violated", report.violated()}};
}

json to_json(const GreedyTrace& trace) {
  json steps = json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    steps.push_back({{"step", i + 1}, {"u", to_json(trace.steps[i])}, {"remaining", to_json(trace.states[i + 1])}});
  return {{"start", to_json(trace.start)}, {"steps", std::move(steps)}, {"step_count", trace.steps.size()}};
}

json to_json(const RatioScan& scan) {
  json thresholds = json::array();
  for (const auto& t : scan.thresholds) thresholds.push_back({{"m", t.m}, {"r_min", t.r_min}});
  json reports = json::array();
  for (const auto& r : scan.reports) reports.push_back(to_json(r));
  return {{"n", scan.n}, {"e", scan.e}, {"thresholds", std::move(thresholds)}, {"reports", std::move(reports)}};
}

json to_json(const BelReport& report) {
  json points = json::array();
  for (const auto& p : report.points)
    points.push_back({{"p", p.p},
                      {"sheaf_reg", p.sheaf_reg},
                      {"module_reg", p.module_reg},
                      {"bound", p.bound},
                      {"holds", p.holds},
                      {"slack", p.slack}});
  return {{"degrees", report.degrees},
          {"codimension", report.codimension},
          {"hypotheses_asserted", report.hypotheses_asserted},
          {"points", std::move(points)},
          {"violated", report.violated()}};
}

json envelope(const std::string& command, const json& parameters, const json& ideal, const json& result,
              const std::string& status) {
  return {{"schema", std::string("regpow/") + command + "/1"},
          {"engine", {{"name", engine_name}, {"version", engine_version}}},
          {"command", command},
          {"parameters", parameters},
          {"ideal", ideal},
          {"result", result},
          {"status", status}};
}

std::string render_csv(const CsvTable& table) {
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      os << s;
      return;
    }
    os << '"';
    for (char c : s) {
      if (c == '"') os << '"';
      os << c;
    }
    os << '"';
  };
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      cell(row[i]);
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return os.str();
}

CsvTable generators_csv(const MonomialIdeal& I) {
  CsvTable t{{"index", "generator", "degree"}, {}};
  std::size_t k = 0;
  for (const auto& g : I.generators()) t.rows.push_back({std::to_string(++k), to_string(g), std::to_string(g.degree())});
  return t;
}

CsvTable betti_csv(const BettiTable& table) {
  CsvTable t{{"i", "multidegree", "degree", "rank"}, {}};
  for (const auto& e : table.entries())
    t.rows.push_back({std::to_string(e.homological), to_string(e.multidegree), std::to_string(e.multidegree.degree()),
                      std::to_string(e.rank)});
  return t;
}

CsvTable sequence_csv(const RegularitySequence& seq) {
  CsvTable t{{"p", "module_reg", "sheaf_reg", "generators", "max_generator_degree", "fit_value"}, {}};
  for (const auto& v : seq.values) {
    std::optional<std::int64_t> fitted;
    if (seq.fit) fitted = seq.fit->at(v.p);
    t.rows.push_back({std::to_string(v.p), std::to_string(v.module_reg), std::to_string(v.sheaf_reg),
                      std::to_string(v.generators), std::to_string(v.max_generator_degree), opt_to_string(fitted)});
  }
  return t;
}

CsvTable containment_csv(std::span<const ContainmentReport> reports) {
  CsvTable t{{"label", "left", "right", "r", "m", "expectation", "verdict", "witness", "violated"}, {}};
  for (const auto& r : reports)
    t.rows.push_back({r.query.label, r.query.left, r.query.right, std::to_string(r.query.r), std::to_string(r.query.m),
                      to_string(r.query.expectation), bool_text(r.verdict), r.witness ? to_string(*r.witness) : "",
                      bool_text(r.violated())});
  return t;
}

CsvTable greedy_csv(const GreedyTrace& trace) {
  CsvTable t{{"step", "u", "remaining", "remaining_degree"}, {}};
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    t.rows.push_back({std::to_string(i + 1), to_string(trace.steps[i]), to_string(trace.states[i + 1]),
                      std::to_string(trace.states[i + 1].degree())});
  return t;
}

CsvTable bel_csv(const BelReport& report) {
  CsvTable t{{"p", "sheaf_reg", "module_reg", "bound", "holds", "slack"}, {}};
  for (const auto& p : report.points)
    t.rows.push_back({std::to_string(p.p), std::to_string(p.sheaf_reg), std::to_string(p.module_reg),
                      std::to_string(p.bound), bool_text(p.holds), std::to_string(p.slack)});
  return t;
}

}  // namespace regpow
