#include <doctest.h>

#include "oracles/random_ideals.hpp"
#include "regpow/error.hpp"
#include "regpow/experiments.hpp"
#include "regpow/parser.hpp"
#include "regpow/stanley_reisner.hpp"

using namespace regpow;

TEST_SUITE("experiments") {
  TEST_CASE("linear tails") {
    const std::vector<std::int64_t> line = {2, 4, 6, 8, 10};
    const auto fit = detect_linear_tail(line);
    REQUIRE(fit);
    CHECK(*fit == LinearFit{2, 0, 1});
    const std::vector<std::int64_t> late = {5, 4, 6, 8, 10};
    CHECK(*detect_linear_tail(late) == LinearFit{2, 0, 2});
    CHECK(detect_linear_tail(late, 3)->onset == 4);
    const std::vector<std::int64_t> short_run = {1, 3, 5};
    CHECK_FALSE(detect_linear_tail(short_run));
    CHECK(detect_linear_tail(short_run, 1, 2));
    const std::vector<std::int64_t> flat = {3, 3, 3, 3, 3};
    CHECK_FALSE(detect_linear_tail(flat));
    const std::vector<std::int64_t> offset = {4, 7, 10, 13};
    CHECK(*detect_linear_tail(offset) == LinearFit{3, 1, 1});
  }

  TEST_CASE("regularity scans on the three coordinate points") {
    const auto I = coordinate_arrangement_ideal(3, 2);
    const auto seq = asymptotic_reg_scan(I, 5, direct_evaluator());
    REQUIRE(seq.values.size() == 5);
    for (const auto& v : seq.values) CHECK(v.sheaf_reg == 2 * static_cast<std::int64_t>(v.p));
    REQUIRE(seq.fit);
    CHECK(seq.fit->slope == 2);
    CHECK(seq.observed_offset == 0);
    CHECK(seq.lower_bound_holds);
    CHECK(seq.upper_bound_holds);
    CHECK_FALSE(seq.violated());

    const auto sym = symbolic_reg_scan(I, 4, direct_evaluator());
    for (const auto& v : sym.values) CHECK(v.sheaf_reg == 2 * static_cast<std::int64_t>(v.p));
    CHECK_FALSE(sym.violated());

    const auto clo = closure_reg_scan(I, 4, direct_evaluator());
    CHECK(clo.values.size() == 4);
    CHECK_FALSE(clo.violated());
  }

  TEST_CASE("scans flag truncation instead of dropping points") {
    Limits tight;
    tight.lcm_closure_cap = 20;
    const auto I = coordinate_arrangement_ideal(3, 2);
    const auto seq = asymptotic_reg_scan(I, 6, direct_evaluator(tight), tight);
    REQUIRE(seq.truncated_at);
    CHECK(seq.values.size() == *seq.truncated_at - 1);
    CHECK_FALSE(seq.truncation_reason.empty());
    CHECK_THROWS_AS(asymptotic_reg_scan(MonomialIdeal::unit(2), 3, direct_evaluator()), DomainError);
    CHECK_THROWS_AS(asymptotic_reg_scan(I, 0, direct_evaluator()), DomainError);
  }

  TEST_CASE("complete intersection meets the degree bound with equality") {
    const auto ci = evaluate_text("ambient(3, ideal(x1^3, x2^2))");
    const auto rep = bel_bound_check(ci, {2, 3}, 2, 3, true, direct_evaluator());
    REQUIRE(rep.points.size() == 3);
    CHECK(rep.degrees == std::vector<std::int64_t>{3, 2});
    for (const auto& pt : rep.points) {
      CHECK(pt.sheaf_reg == 3 * static_cast<std::int64_t>(pt.p) + 1);
      CHECK(pt.slack == 0);
      CHECK(pt.holds);
    }
    CHECK_FALSE(rep.violated());
    CHECK_THROWS_AS(bel_bound_check(ci, {3}, 2, 3, false, direct_evaluator()), DomainError);
  }

  TEST_CASE("family containments for the three coordinate points") {
    for (unsigned t = 1; t <= 2; ++t) {
      const auto reports = family_containments(FamilyParams(3, 2, t));
      REQUIRE(reports.size() == 2);
      CHECK_FALSE(reports[0].verdict);
      REQUIRE(reports[0].witness);
      CHECK(*reports[0].witness == pow(Monomial{1, 1, 1}, 2 * t));
      CHECK(reports[0].witness_rechecked);
      CHECK(reports[1].verdict);
      CHECK_FALSE(reports[0].violated());
      CHECK_FALSE(reports[1].violated());
      CHECK(reports[1].query.left == "symbolic(arrangement(3, 2), " + std::to_string(4 * t) + ")");
    }
    CHECK_THROWS_AS(FamilyParams(3, 3, 1), DomainError);
    CHECK_THROWS_AS(FamilyParams(3, 2, 0), DomainError);
  }

  TEST_CASE("closed form and greedy certificates") {
    const FamilyParams fp(3, 2, 1);
    CHECK(power_closed_form(fp) == power(coordinate_arrangement_ideal(3, 2), 3));
    const auto trace = greedy_decompose(Monomial{2, 2, 2}, fp);
    CHECK(trace.steps.size() == 3);
    CHECK(trace.steps[0] == Monomial{1, 1, 0});
    CHECK(trace_violations(trace, fp).empty());
    CHECK(trace.states.back().is_one());
    CHECK_THROWS_WITH_AS(greedy_decompose(Monomial{4, 1, 1}, fp), "exponent bound violated: b_1 = 4 exceeds nt = 3",
                         DomainError);
    CHECK_THROWS_WITH_AS(greedy_decompose(Monomial{1, 1, 1}, fp),
                         "degree condition violated: exponents sum to 3, expected ndt = 6", DomainError);
    // a tampered trace is caught
    GreedyTrace bad = trace;
    bad.steps[1] = Monomial{1, 0, 0};
    CHECK_FALSE(trace_violations(bad, fp).empty());
  }

  TEST_CASE("containment checks") {
    const auto I = coordinate_arrangement_ideal(3, 2);
    ContainmentQuery q;
    q.expectation = Expectation::holds;
    const auto yes = check_containment(q, power(I, 2), I);
    CHECK(yes.verdict);
    CHECK_FALSE(yes.violated());
    const auto no = check_containment(q, I, power(I, 2));
    CHECK_FALSE(no.verdict);
    CHECK(no.witness == Monomial{1, 1, 0});
    CHECK(no.witness_rechecked);
    CHECK(no.violated());
    q.expectation = Expectation::observation;
    CHECK_FALSE(check_containment(q, I, power(I, 2)).violated());
    // a hint that separates the ideals becomes the witness
    const auto hinted = check_containment(q, I, power(I, 2), Monomial{0, 1, 1});
    CHECK(hinted.witness == Monomial{0, 1, 1});
  }

  TEST_CASE("containment scans on random squarefree ideals") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 10; ++iter) {
      const auto I = gen::squarefree(rng, 2 + rng() % 3, 1 + rng() % 4);
      for (const auto& r : els_scan(I, 2)) CHECK_FALSE(r.violated());
      for (const auto& r : harbourne_scan(I, 2)) CHECK_FALSE(r.violated());
    }
  }

  TEST_CASE("ratio thresholds") {
    const auto scan = ratio_scan(3, 2, 8, 4);
    REQUIRE(scan.thresholds.size() == 4);
    CHECK(scan.thresholds[0].r_min == 2);
    CHECK(scan.thresholds[1].r_min == 3);
    CHECK(scan.thresholds[2].r_min == 4);
    CHECK(scan.thresholds[3].r_min == 6);
    CHECK(scan.reports.size() == 32);
    for (const auto& r : scan.reports) CHECK_FALSE(r.violated());
  }
}
