#include "regpow/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "regpow/cache.hpp"
#include "regpow/integral_closure.hpp"
#include "regpow/parser.hpp"
#include "regpow/report.hpp"
#include "regpow/stanley_reisner.hpp"

namespace regpow::cli {

namespace fs = std::filesystem;

namespace {

// Raised for bad settings outside the mathematical domain.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Flags {
  std::optional<std::string> out_dir;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  std::optional<int> threads;
  std::optional<std::size_t> enum_cap;
  std::optional<std::size_t> lcm_cap;
  std::optional<double> audit_rate;
  std::optional<std::string> config;
};

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return v != nullptr && *v != '\0' ? v : nullptr;
}

template <class T>
T parse_number(const std::string& text, const std::string& what) {
  std::istringstream in(text);
  T v{};
  if (!(in >> v) || !in.eof()) throw UsageError("invalid value '" + text + "' for " + what);
  return v;
}

Config resolve(const Flags& flags) {
  Config cfg;
  std::optional<std::string> config_path = flags.config;
  if (!config_path && env(env_config)) config_path = env(env_config);
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw UsageError("cannot read config file " + *config_path);
    const json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw UsageError("config file " + *config_path + " is not a JSON object");
    try {
      if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
      if (j.contains("cache_dir")) cfg.cache_dir = j["cache_dir"].get<std::string>();
      if (j.contains("cache")) cfg.use_cache = j["cache"].get<bool>();
      if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
      if (j.contains("enumeration_cap")) cfg.limits.enumeration_cap = j["enumeration_cap"].get<std::size_t>();
      if (j.contains("lcm_closure_cap")) cfg.limits.lcm_closure_cap = j["lcm_closure_cap"].get<std::size_t>();
      if (j.contains("audit_rate")) cfg.audit_rate = j["audit_rate"].get<double>();
    } catch (const json::exception& e) {
      throw UsageError("config file " + *config_path + ": " + e.what());
    }
  }
  if (const char* v = env(env_cache_dir)) cfg.cache_dir = v;
  if (const char* v = env(env_threads)) cfg.threads = parse_number<int>(v, env_threads);
  if (const char* v = env(env_enum_cap)) cfg.limits.enumeration_cap = parse_number<std::size_t>(v, env_enum_cap);
  if (const char* v = env(env_lcm_cap)) cfg.limits.lcm_closure_cap = parse_number<std::size_t>(v, env_lcm_cap);
  if (const char* v = env(env_audit_rate)) cfg.audit_rate = parse_number<double>(v, env_audit_rate);

  if (flags.out_dir) cfg.out_dir = *flags.out_dir;
  if (flags.cache_dir) cfg.cache_dir = *flags.cache_dir;
  if (flags.no_cache) cfg.use_cache = false;
  if (flags.threads) cfg.threads = *flags.threads;
  if (flags.enum_cap) cfg.limits.enumeration_cap = *flags.enum_cap;
  if (flags.lcm_cap) cfg.limits.lcm_closure_cap = *flags.lcm_cap;
  if (flags.audit_rate) cfg.audit_rate = *flags.audit_rate;
  if (cfg.audit_rate < 0.0 || cfg.audit_rate > 1.0) throw UsageError("audit rate must lie in [0, 1]");
  return cfg;
}

struct Loaded {
  Expr expr;
  std::size_t nvars = 0;
  MonomialIdeal ideal;
};

struct CommandResult {
  json parameters = json::object();
  json ideal = nullptr;
  json result = nullptr;
  std::string status = "ok";
  std::optional<CsvTable> csv;
  int exit_code = ok;
};

class Session {
 public:
  explicit Session(Config cfg) : cfg_(std::move(cfg)) {
    if (cfg_.use_cache) cache_ = std::make_unique<ResultCache>(cfg_.cache_dir, engine_version, cfg_.audit_rate);
  }

  const Config& config() const { return cfg_; }
  const Limits& limits() const { return cfg_.limits; }

  Loaded load(const std::string& text, std::size_t nvars) const {
    Loaded l{parse_ideal(text), 0, MonomialIdeal::zero(1)};
    const std::size_t inferred = infer_ambient(l.expr);
    if (nvars != 0 && nvars < inferred)
      throw AmbientMismatch("--nvars " + std::to_string(nvars) + " is smaller than the " + std::to_string(inferred) +
                            " variables the expression needs");
    l.nvars = nvars != 0 ? nvars : inferred;
    l.ideal = evaluate(l.expr, l.nvars, cfg_.limits);
    return l;
  }

  static std::string ring_text(const MonomialIdeal& I) {
    return "ring(" + std::to_string(I.nvars()) + ") " + to_string(I);
  }

  json cached(const MonomialIdeal& I, const std::string& operation, const std::function<json()>& compute) {
    if (!cache_) return compute();
    const std::string key = cache_->make_key(ring_text(I), operation, json::object());
    return cache_->get_or_compute(key, compute);
  }

  RegularityEvaluator evaluator() {
    return [this](const MonomialIdeal& I) {
      return regularity_from_json(cached(I, "regularity", [&] { return to_json(regularity(I, cfg_.limits)); }));
    };
  }

  json cache_meta() const {
    if (!cache_) return {{"enabled", false}};
    const auto& s = cache_->stats();
    return {{"enabled", true},
            {"directory", cache_->directory().string()},
            {"hits", s.hits},
            {"misses", s.misses},
            {"corrupt", s.corrupt},
            {"audits", s.audits},
            {"audit_mismatches", s.audit_mismatches},
            {"warnings", cache_->warnings()}};
  }

  const std::vector<std::string>* warnings() const { return cache_ ? &cache_->warnings() : nullptr; }

 private:
  Config cfg_;
  std::unique_ptr<ResultCache> cache_;
};

json expression_params(const Loaded& l) { return {{"expression", pretty_print(l.expr)}, {"nvars", l.nvars}}; }

std::string scan_status(bool violated, bool truncated) {
  if (violated) return "violated";
  return truncated ? "truncated" : "ok";
}

int scan_exit(bool violated, bool truncated) {
  if (violated) return verdict_failure;
  return truncated ? resource_cap : ok;
}

CommandResult ideal_result(const Loaded& l, const MonomialIdeal& J, json params) {
  CommandResult r;
  r.parameters = std::move(params);
  r.ideal = to_json(l.ideal);
  r.result = to_json(J);
  r.csv = generators_csv(J);
  return r;
}

CommandResult containment_result(json params, const std::vector<ContainmentReport>& reports) {
  CommandResult r;
  r.parameters = std::move(params);
  json list = json::array();
  std::size_t violations = 0;
  for (const auto& c : reports) {
    list.push_back(to_json(c));
    violations += c.violated() ? 1 : 0;
  }
  const bool violated = violations != 0;
  r.result = {{"reports", std::move(list)}, {"violations", violations}};
  r.csv = containment_csv(reports);
  r.status = scan_status(violated, false);
  r.exit_code = scan_exit(violated, false);
  return r;
}

// Left-hand membership through a route independent of the evaluated generators.
std::function<bool(const Monomial&)> left_oracle(const Loaded& left, const Session& session) {
  const Expr& e = left.expr.kind == Expr::Kind::ambient ? left.expr.args.front() : left.expr;
  if (e.kind != Expr::Kind::symbolic && e.kind != Expr::Kind::closure) return {};
  const MonomialIdeal base = evaluate(e.args.front(), left.nvars, session.limits());
  const unsigned p = e.params.front();
  if (e.kind == Expr::Kind::symbolic) return [base, p](const Monomial& m) { return symbolic_membership(m, base, p); };
  return [base, p](const Monomial& m) { return integral_closure_membership(m, base, p); };
}

ContainmentMode infer_mode(const Expr& left, const Expr& right) {
  if (right.kind != Expr::Kind::power) return ContainmentMode::expression;
  switch (left.kind) {
    case Expr::Kind::symbolic: return ContainmentMode::symbolic_in_power;
    case Expr::Kind::closure: return ContainmentMode::closure_in_power;
    case Expr::Kind::power: return ContainmentMode::power_in_power;
    default: return ContainmentMode::expression;
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("cannot write " + path.string());
}

json diagnostic(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

std::string now_iso() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regularity and containment experiments for monomial ideals", "regpow"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--out", flags.out_dir, "Output directory for reports");
  app.add_option("--cache-dir", flags.cache_dir, "Result cache directory");
  app.add_flag("--no-cache", flags.no_cache, "Disable the result cache");
  app.add_option("--threads", flags.threads, "Worker threads (0 = runtime default)");
  app.add_option("--enum-cap", flags.enum_cap, "Maximum box enumeration size");
  app.add_option("--lcm-cap", flags.lcm_cap, "Maximum lcm closure size");
  app.add_option("--audit-rate", flags.audit_rate, "Fraction of cache hits recomputed");
  app.add_option("--config", flags.config, "JSON config file");

  // Options filled by whichever subcommand runs.
  std::string expr;
  std::size_t nvars = 0;
  unsigned p = 0;
  unsigned pmax = 0;
  unsigned mmax = 0;
  unsigned rmax = 0;
  std::size_t n = 0;
  std::size_t e = 0;
  unsigned t = 1;
  std::string left_text;
  std::string right_text;
  std::optional<std::string> b_text;
  std::vector<std::int64_t> degrees;
  bool hypotheses_asserted = false;

  std::string command;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&command, name] { command = name; });
    return sub;
  };
  auto with_expr = [&](CLI::App* sub) {
    sub->add_option("expression", expr, "Ideal expression")->required();
    sub->add_option("--nvars", nvars, "Ambient number of variables (default: inferred)");
    return sub;
  };

  std::map<std::string, std::function<CommandResult(Session&)>> handlers;

  with_expr(add("eval", "Evaluate an ideal expression to minimal generators"));
  handlers["eval"] = [&](Session& s) {
    const Loaded l = s.load(expr, nvars);
    return ideal_result(l, l.ideal, expression_params(l));
  };

  with_expr(add("reg", "Module and sheaf regularity"));
  handlers["reg"] = [&](Session& s) {
    const Loaded l = s.load(expr, nvars);
    const RegularityValue v = s.evaluator()(l.ideal);
    CommandResult r;
    r.parameters = expression_params(l);
    r.ideal = to_json(l.ideal);
    r.result = regularity_report(v);
    r.result["saturation"] = to_string(saturate_irrelevant(l.ideal));
    r.csv = CsvTable{{"module_reg", "sheaf_reg"}, {{std::to_string(v.module_reg), std::to_string(v.sheaf_reg)}}};
    return r;
  };

  with_expr(add("betti", "Multigraded Betti numbers"));
  handlers["betti"] = [&](Session& s) {
    const Loaded l = s.load(expr, nvars);
    CommandResult r;
    r.parameters = expression_params(l);
    r.ideal = to_json(l.ideal);
    r.result = s.cached(l.ideal, "betti", [&] { return to_json(betti_table(l.ideal, s.limits())); });
    r.csv = CsvTable{{"i", "multidegree", "degree", "rank"}, {}};
    for (const auto& entry : r.result["entries"]) {
      std::uint64_t degree = 0;
      for (const auto& x : entry["multidegree"]["exponents"]) degree += x.get<std::uint64_t>();
      r.csv->rows.push_back({std::to_string(entry["i"].get<unsigned>()), entry["multidegree"]["text"].get<std::string>(),
                             std::to_string(degree), std::to_string(entry["rank"].get<std::size_t>())});
    }
    return r;
  };

  const std::map<std::string, std::string> power_help = {
      {"power", "The p-th ordinary power"}, {"symbolic", "The p-th symbolic power"},
      {"closure", "Integral closure of the p-th power"}};
  for (const std::string name : {"power", "symbolic", "closure"}) {
    with_expr(add(name, power_help.at(name)))->add_option("--p", p, "Exponent")->required();
    handlers[name] = [&, name](Session& s) {
      const Loaded l = s.load(expr, nvars);
      json params = expression_params(l);
      params["p"] = p;
      MonomialIdeal J = MonomialIdeal::zero(l.nvars);
      if (name == "power") {
        J = power(l.ideal, p);
      } else {
        if (p == 0) throw DomainError(name + " powers need p >= 1");
        J = name == "symbolic" ? symbolic_power(l.ideal, p, s.limits()) : integral_closure_power(l.ideal, p, s.limits());
      }
      return ideal_result(l, J, params);
    };
  }

  with_expr(add("saturate", "Saturation by the irrelevant ideal"));
  handlers["saturate"] = [&](Session& s) {
    const Loaded l = s.load(expr, nvars);
    return ideal_result(l, saturate_irrelevant(l.ideal), expression_params(l));
  };

  with_expr(add("radical", "Radical"));
  handlers["radical"] = [&](Session& s) {
    const Loaded l = s.load(expr, nvars);
    return ideal_result(l, radical(l.ideal), expression_params(l));
  };

  {
    CLI::App* sub = add("contains", "Decide whether the left ideal lies in the right ideal");
    sub->add_option("--left", left_text, "Left expression")->required();
    sub->add_option("--right", right_text, "Right expression")->required();
    sub->add_option("--nvars", nvars, "Ambient number of variables (default: inferred)");
  }
  handlers["contains"] = [&](Session& s) {
    const Expr le = parse_ideal(left_text);
    const Expr re = parse_ideal(right_text);
    const std::size_t need = std::max(infer_ambient(le), infer_ambient(re));
    const std::size_t ring = std::max(nvars, need);
    if (nvars != 0 && nvars < need) throw AmbientMismatch("--nvars is smaller than the expressions need");
    const Loaded left = s.load(left_text, ring);
    const Loaded right = s.load(right_text, ring);
    ContainmentQuery q;
    q.label = "contains";
    q.left = pretty_print(left.expr);
    q.right = pretty_print(right.expr);
    q.mode = infer_mode(left.expr, right.expr);
    if (left.expr.kind != Expr::Kind::ideal && !left.expr.params.empty()) q.r = left.expr.params.front();
    if (right.expr.kind == Expr::Kind::power) q.m = right.expr.params.front();
    const ContainmentReport report = check_containment(q, left.ideal, right.ideal, std::nullopt, left_oracle(left, s));
    CommandResult r;
    r.parameters = {{"left", q.left}, {"right", q.right}, {"nvars", ring}};
    r.ideal = {{"left", to_json(left.ideal)}, {"right", to_json(right.ideal)}};
    r.result = to_json(report);
    r.csv = containment_csv(std::span<const ContainmentReport>(&report, 1));
    return r;
  };

  const std::vector<std::pair<std::string, SequenceKind>> scans = {
      {"scan-asymptotic", SequenceKind::ordinary},
      {"scan-symbolic", SequenceKind::symbolic},
      {"scan-closure", SequenceKind::closure}};
  for (const auto& [name, kind] : scans) {
    with_expr(add(name, std::string("Regularity of ") + to_string(kind) + " powers for p = 1..pmax"))
        ->add_option("--pmax", pmax, "Largest power")
        ->required();
    handlers[name] = [&, kind = kind](Session& s) {
      const Loaded l = s.load(expr, nvars);
      const auto ev = s.evaluator();
      RegularitySequence seq = kind == SequenceKind::ordinary ? asymptotic_reg_scan(l.ideal, pmax, ev, s.limits())
                               : kind == SequenceKind::symbolic ? symbolic_reg_scan(l.ideal, pmax, ev, s.limits())
                                                                : closure_reg_scan(l.ideal, pmax, ev, s.limits());
      CommandResult r;
      r.parameters = expression_params(l);
      r.parameters["pmax"] = pmax;
      r.ideal = to_json(l.ideal);
      r.result = to_json(seq);
      r.csv = sequence_csv(seq);
      r.status = scan_status(seq.violated(), seq.truncated_at.has_value());
      r.exit_code = scan_exit(seq.violated(), seq.truncated_at.has_value());
      return r;
    };
  }

  with_expr(add("scan-els", "I^(hp) in I^p for p = 1..pmax, h the big height"))
      ->add_option("--pmax", pmax, "Largest p")
      ->required();
  handlers["scan-els"] = [&](Session& s) {
    const Loaded l = s.load(expr, nvars);
    json params = expression_params(l);
    params["pmax"] = pmax;
    CommandResult r = containment_result(params, els_scan(l.ideal, pmax, s.limits()));
    r.ideal = to_json(l.ideal);
    r.result["big_height"] = big_height(l.ideal);
    return r;
  };

  with_expr(add("scan-harbourne", "I^(hm - h + 1) in I^m for m = 1..mmax"))
      ->add_option("--mmax", mmax, "Largest m")
      ->required();
  handlers["scan-harbourne"] = [&](Session& s) {
    const Loaded l = s.load(expr, nvars);
    json params = expression_params(l);
    params["mmax"] = mmax;
    CommandResult r = containment_result(params, harbourne_scan(l.ideal, mmax, s.limits()));
    r.ideal = to_json(l.ideal);
    r.result["big_height"] = big_height(l.ideal);
    return r;
  };

  {
    CLI::App* sub = add("scan-ratio", "I^(r) in I^m on the arrangement family for r <= rmax, m <= mmax");
    sub->add_option("--n", n, "Ambient dimension")->required();
    sub->add_option("--e", e, "Codimension")->required();
    sub->add_option("--rmax", rmax, "Largest r")->required();
    sub->add_option("--mmax", mmax, "Largest m")->required();
  }
  handlers["scan-ratio"] = [&](Session& s) {
    const RatioScan scan = ratio_scan(n, e, rmax, mmax, s.limits());
    CommandResult r = containment_result({{"n", n}, {"e", e}, {"rmax", rmax}, {"mmax", mmax}}, scan.reports);
    r.ideal = to_json(coordinate_arrangement_ideal(n, e));
    const json full = to_json(scan);
    r.result["thresholds"] = full["thresholds"];
    return r;
  };

  {
    CLI::App* sub = add("family-check", "Both containments for the arrangement family");
    sub->add_option("--n", n, "Ambient dimension")->required();
    sub->add_option("--e", e, "Codimension")->required();
    sub->add_option("--t", t, "Multiplier")->required();
  }
  handlers["family-check"] = [&](Session& s) {
    const FamilyParams fp(n, e, t);
    CommandResult r = containment_result({{"n", n}, {"e", e}, {"t", t}}, family_containments(fp, s.limits()));
    r.ideal = to_json(coordinate_arrangement_ideal(n, e));
    r.result["d"] = fp.d();
    return r;
  };

  {
    CLI::App* sub = add("greedy-cert", "Greedy decomposition certificates for generators of I^{nt}");
    sub->add_option("--n", n, "Ambient dimension")->required();
    sub->add_option("--e", e, "Codimension")->required();
    sub->add_option("--t", t, "Multiplier")->required();
    sub->add_option("--b", b_text, "One monomial to decompose (default: every generator)");
  }
  handlers["greedy-cert"] = [&](Session& s) {
    const FamilyParams fp(n, e, t);
    CommandResult r;
    r.parameters = {{"n", n}, {"e", e}, {"t", t}};
    r.ideal = to_json(coordinate_arrangement_ideal(n, e));
    bool violated = false;
    if (b_text) {
      const MonomialIdeal single = evaluate_text("ideal(" + *b_text + ")", n, s.limits());
      if (single.size() != 1) throw DomainError("--b must be a single monomial");
      const GreedyTrace trace = greedy_decompose(single.generators().front(), fp);
      const auto problems = trace_violations(trace, fp);
      violated = !problems.empty();
      r.parameters["b"] = to_string(single.generators().front());
      r.result = to_json(trace);
      r.result["violations"] = problems;
      r.csv = greedy_csv(trace);
    } else {
      const MonomialIdeal gens = power_closed_form(fp, s.limits());
      json traces = json::array();
      CsvTable table{{"generator", "steps", "valid"}, {}};
      std::size_t failures = 0;
      for (const auto& g : gens.generators()) {
        const GreedyTrace trace = greedy_decompose(g, fp);
        const auto problems = trace_violations(trace, fp);
        failures += problems.empty() ? 0 : 1;
        traces.push_back({{"start", to_string(g)}, {"steps", trace.steps.size()}, {"violations", problems}});
        table.rows.push_back({to_string(g), std::to_string(trace.steps.size()), problems.empty() ? "true" : "false"});
      }
      violated = failures != 0;
      r.result = {{"generators", gens.size()}, {"failures", failures}, {"traces", std::move(traces)}};
      r.csv = std::move(table);
    }
    r.status = scan_status(violated, false);
    r.exit_code = scan_exit(violated, false);
    return r;
  };

  {
    CLI::App* sub = with_expr(add("bel-check", "Compare sheaf regularity of powers with the degree bound"));
    sub->add_option("--degrees", degrees, "Defining degrees, comma separated")->required()->delimiter(',');
    sub->add_option("--e", e, "Codimension")->required();
    sub->add_option("--pmax", pmax, "Largest power")->required();
    sub->add_flag("--hypotheses-asserted", hypotheses_asserted,
                  "Assert the subscheme is lci with log canonical singularities");
  }
  handlers["bel-check"] = [&](Session& s) {
    const Loaded l = s.load(expr, nvars);
    const BelReport rep = bel_bound_check(l.ideal, degrees, e, pmax, hypotheses_asserted, s.evaluator());
    CommandResult r;
    r.parameters = expression_params(l);
    r.parameters["degrees"] = degrees;
    r.parameters["e"] = e;
    r.parameters["pmax"] = pmax;
    r.parameters["hypotheses_asserted"] = hypotheses_asserted;
    r.ideal = to_json(l.ideal);
    r.result = to_json(rep);
    r.csv = bel_csv(rep);
    r.status = scan_status(rep.violated(), false);
    r.exit_code = scan_exit(rep.violated(), false);
    return r;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    err << diagnostic("usage", ex.what()).dump() << '\n';
    return usage;
  }

  const auto started = std::chrono::steady_clock::now();
  const std::string started_at = now_iso();
  try {
    Session session(resolve(flags));
    set_worker_count(session.config().threads);
    CommandResult r = handlers.at(command)(session);

    const json report = envelope(command, r.parameters, r.ideal, r.result, r.status);
    const std::string text = report.dump(2) + "\n";
    const fs::path dir = session.config().out_dir;
    fs::create_directories(dir);
    write_file(dir / (command + ".json"), text);
    if (r.csv) write_file(dir / (command + ".csv"), render_csv(*r.csv));
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    const json meta = {{"command", command},
                       {"started_at", started_at},
                       {"finished_at", now_iso()},
                       {"elapsed_ms", elapsed},
                       {"threads", worker_count()},
                       {"cache", session.cache_meta()}};
    write_file(dir / (command + ".meta.json"), meta.dump(2) + "\n");
    if (const auto* w = session.warnings())
      for (const auto& msg : *w) err << json{{"warning", msg}}.dump() << '\n';
    out << text;
    return r.exit_code;
  } catch (const ParseError& ex) {
    json d = diagnostic("parse", ex.what());
    d["error"]["line"] = ex.line();
    d["error"]["column"] = ex.column();
    d["error"]["expected"] = ex.expected();
    d["error"]["found"] = ex.found();
    err << d.dump() << '\n';
    return usage;
  } catch (const CapExceeded& ex) {
    err << diagnostic("cap_exceeded", ex.what()).dump() << '\n';
    return resource_cap;
  } catch (const OverflowError& ex) {
    err << diagnostic("overflow", ex.what()).dump() << '\n';
    return resource_cap;
  } catch (const AmbientMismatch& ex) {
    err << diagnostic("ambient_mismatch", ex.what()).dump() << '\n';
    return usage;
  } catch (const DomainError& ex) {
    err << diagnostic("domain", ex.what()).dump() << '\n';
    return usage;
  } catch (const UsageError& ex) {
    err << diagnostic("usage", ex.what()).dump() << '\n';
    return usage;
  } catch (const std::exception& ex) {
    err << diagnostic("internal", ex.what()).dump() << '\n';
    return usage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace regpow::cli
