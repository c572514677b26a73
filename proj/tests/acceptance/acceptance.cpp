// Acceptance suite: one PASS/FAIL line per criterion, each against its time
// budget. Exit status is the number of failed criteria (capped at 1).
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles/oracles.hpp"
#include "oracles/random_ideals.hpp"
#include "regpow/betti.hpp"
#include "regpow/cli.hpp"
#include "regpow/experiments.hpp"
#include "regpow/parser.hpp"
#include "regpow/stanley_reisner.hpp"

using namespace regpow;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::vector<MonomialIdeal> squarefree_corpus() {
  std::vector<MonomialIdeal> out;
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t e = 1; e < n; ++e) out.push_back(coordinate_arrangement_ideal(n, e));
  std::mt19937 rng(20);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + rng() % 4;
    out.push_back(gen::squarefree(rng, n, 1 + rng() % 5));
  }
  return out;
}

Outcome example_containments(unsigned t) {
  Outcome o;
  const auto reports = family_containments(FamilyParams(3, 2, t));
  const Monomial y = pow(Monomial{1, 1, 1}, 2 * t);
  o.require(reports.size() == 2, "expected two reports");
  o.require(reports[1].verdict, "I^(4t) in I^3t reported false");
  o.require(!reports[0].verdict, "I^(4t) in I^(3t+1) reported true");
  o.require(reports[0].witness == y, "witness differs from (x1x2x3)^(2t)");
  o.require(reports[0].witness_rechecked, "witness failed the independent recheck");
  o.require(membership(y, symbolic_power(coordinate_arrangement_ideal(3, 2), 4 * t)), "witness outside I^(4t)");
  o.require(!membership(y, power(coordinate_arrangement_ideal(3, 2), 3 * t + 1)), "witness inside I^(3t+1)");
  return o;
}

Outcome family_check() {
  Outcome o;
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}};
  for (const auto& [n, e] : shapes) {
    const FamilyParams fp(n, e, 1);
    const auto reports = family_containments(fp);
    const Monomial y = pow(indicator(n, (1ULL << n) - 1), fp.d());
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(e) + ")";
    o.require(!reports[0].verdict && reports[0].witness == y && reports[0].witness_rechecked, tag + " part (i)");
    o.require(reports[1].verdict, tag + " part (ii)");
  }
  return o;
}

Outcome closed_form() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t e = 1; e < n; ++e)
      for (unsigned t = 1; t <= 2; ++t) {
        const FamilyParams fp(n, e, t);
        const auto direct = power(coordinate_arrangement_ideal(n, e), fp.nt());
        o.require(power_closed_form(fp) == direct,
                  "closed form differs for (" + std::to_string(n) + "," + std::to_string(e) + "," + std::to_string(t) +
                      ")");
      }
  return o;
}

Outcome greedy() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t e = 1; e < n; ++e)
      for (unsigned t = 1; t <= 2; ++t) {
        const FamilyParams fp(n, e, t);
        const auto P = power(coordinate_arrangement_ideal(n, e), fp.nt());
        for (const auto& b : P.generators()) {
          const auto trace = greedy_decompose(b, fp);
          o.require(trace_violations(trace, fp).empty(), "trace invariant failed for " + to_string(b));
          o.require(trace.steps.size() == fp.nt(), "wrong step count for " + to_string(b));
          for (std::size_t i = 0; i < trace.states.size(); ++i) {
            const auto& s = trace.states[i];
            const auto mx = *std::max_element(s.exponents().begin(), s.exponents().end());
            o.require(s.degree() == fp.ndt() - fp.d() * i, "sum invariant at step " + std::to_string(i));
            o.require(mx <= fp.nt() - i, "max invariant at step " + std::to_string(i));
          }
          ++checked;
        }
      }
  o.detail = o.ok ? std::to_string(checked) + " generators certified" : o.detail;
  return o;
}

Outcome fixtures() {
  Outcome o;
  o.require(regularity(evaluate_text("ideal(x1^2, x2^3)")).module_reg == 4, "reg(x1^2, x2^3) != 4");
  const auto r = regularity(coordinate_arrangement_ideal(3, 2));
  o.require(r.module_reg == 2 && r.sheaf_reg == 2, "reg(arrangement(3,2)) != 2");
  const auto ci = evaluate_text("ambient(3, ideal(x1^3, x2^2))");
  for (unsigned p = 1; p <= 3; ++p)
    o.require(regularity(power(ci, p)).sheaf_reg == 3 * p + 1, "CI sheaf reg at p = " + std::to_string(p));
  return o;
}

Outcome linearity() {
  Outcome o;
  const auto seq = asymptotic_reg_scan(coordinate_arrangement_ideal(3, 2), 5, direct_evaluator());
  o.require(!seq.truncated_at, "scan truncated");
  o.require(seq.values.size() == 5, "missing points");
  o.require(seq.fit && seq.fit->slope == 2, "no linear tail of slope 2");
  o.require(seq.observed_offset.has_value(), "no offset");
  if (seq.fit && seq.observed_offset) {
    for (const auto& v : seq.values) {
      const std::int64_t dp = 2 * static_cast<std::int64_t>(v.p);
      o.require(dp <= v.sheaf_reg && v.sheaf_reg <= dp + *seq.observed_offset, "bound at p = " + std::to_string(v.p));
    }
    if (o.ok) o.detail = "slope 2, e_obs = " + std::to_string(*seq.observed_offset);
  }
  return o;
}

template <class Scan>
Outcome corpus_scan(Scan scan) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& I : squarefree_corpus()) {
    for (const auto& r : scan(I)) {
      ++checks;
      const bool holds = r.query.expectation != Expectation::holds || r.verdict;
      o.require(holds && !r.violated(), "violation: " + r.query.left + " in " + r.query.right);
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " containments";
  return o;
}

Outcome ratio() {
  Outcome o;
  const auto scan = ratio_scan(3, 2, 8, 4);
  std::size_t implied = 0;
  for (const auto& r : scan.reports) {
    if (r.query.r * 3 < 2 * 2 * r.query.m) continue;
    ++implied;
    o.require(r.verdict, "containment fails at r = " + std::to_string(r.query.r) + ", m = " + std::to_string(r.query.m));
  }
  if (o.ok) o.detail = std::to_string(implied) + " implied containments hold";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(10);
  // algebra laws
  for (int iter = 0; iter < 100; ++iter) {
    const auto I = gen::ideal(rng, 3, 1 + rng() % 4, 3);
    const auto J = gen::ideal(rng, 3, 1 + rng() % 4, 3);
    o.require(intersect(I, I) == I && sum(I, I) == I, "idempotence");
    o.require(is_subset(multiply(I, J), intersect(I, J)), "product inside intersection");
    o.require(is_subset(power(I, 3), power(I, 2)) && is_subset(power(I, 2), I), "power monotonicity");
  }
  // symbolic fast path against generator membership
  const auto E = coordinate_arrangement_ideal(3, 2);
  for (unsigned p = 1; p <= 6; ++p) {
    const auto S = symbolic_power(E, p);
    oracle::for_box(oracle::Vec(3, 6), [&](const oracle::Vec& a) {
      if (oracle::degree(a) > 6) return;
      const Monomial m(std::vector<Exponent>(a.begin(), a.end()));
      o.require(membership(m, S) == symbolic_membership(m, E, p), "symbolic fast path at " + to_string(m));
    });
  }
  // homology permutation invariance and Euler characteristic
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Face> facets;
    for (unsigned k = 0; k < 1 + rng() % 5; ++k) facets.push_back(rng() % 64);
    const auto K = SimplicialComplex::from_facets(facets);
    const auto h = reduced_homology_ranks(K);
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    o.require(reduced_homology_ranks(K.relabel(perm)) == h, "permutation invariance");
    const auto f = face_counts(K);
    long long chi_f = 0, chi_h = 0;
    for (std::size_t k = 0; k < f.size(); ++k) chi_f += (k % 2 ? -1 : 1) * static_cast<long long>(f[k]);
    for (std::size_t k = 0; k < h.size(); ++k) chi_h += (k % 2 ? -1 : 1) * static_cast<long long>(h[k]);
    o.require(chi_f == chi_h, "Euler characteristic");
  }
  // parser round trip
  for (const char* text : {"ideal(x1*x2, x2*x3, x1*x3)", "arrangement(4,2)", "power(sat(ideal(x1^2, x1*x2)), 3)",
                           "intersect(ideal(x1), ideal(x2), ideal(x3^2))", "ambient(5, symbolic(arrangement(3,2),2))",
                           "closure(product(ideal(x1^3), sum(ideal(x2), ideal(x3^2))), 2)", "radical(ideal(1))"}) {
    const Expr e = parse_ideal(text);
    o.require(parse_ideal(pretty_print(e)) == e, std::string("round trip of ") + text);
  }
  // cache determinism through the command line
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "regpow_acceptance";
  fs::remove_all(root);
  const std::vector<std::string> args = {"--out", (root / "out").string(), "--cache-dir", (root / "cache").string(),
                                         "reg", "power(arrangement(3,2), 2)"};
  std::ostringstream sink, err;
  o.require(cli::run(args, sink, err) == 0, "first reg run");
  const std::string first = slurp(root / "out" / "reg.json");
  o.require(cli::run(args, sink, err) == 0, "second reg run");
  o.require(slurp(root / "out" / "reg.json") == first, "cached report differs");
  const auto meta = nlohmann::json::parse(slurp(root / "out" / "reg.meta.json"));
  o.require(meta["cache"]["hits"] == 1, "second run did not hit the cache");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "example containments, t = 1", 5, [] { return example_containments(1); }},
      {1, "example containments, t = 2", 5, [] { return example_containments(2); }},
      {2, "arrangement family (i) and (ii), t = 1", 120, family_check},
      {3, "closed form equals direct power", 300, closed_form},
      {4, "greedy certificates", 300, greedy},
      {5, "regularity fixtures", 60, fixtures},
      {6, "asymptotic linearity of arrangement(3,2)", 1800, linearity},
      {7, "ELS containments on the corpus", 600,
       [] { return corpus_scan([](const MonomialIdeal& I) { return els_scan(I, 3); }); }},
      {8, "Harbourne threshold on the corpus", 600,
       [] { return corpus_scan([](const MonomialIdeal& I) { return harbourne_scan(I, 3); }); }},
      {9, "ratio criterion on arrangement(3,2)", 300, ratio},
      {10, "property suites", 600, properties},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= c.budget_seconds;
    const bool pass = o.ok && in_budget;
    if (!in_budget && o.ok) o.detail = "over budget";
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %2d: %-42s %9.3f s (budget %6.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu checks failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
