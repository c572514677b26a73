#include "regpow/experiments.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "regpow/box.hpp"
#include "regpow/error.hpp"
#include "regpow/integral_closure.hpp"
#include "regpow/stanley_reisner.hpp"

namespace regpow {

RegularityEvaluator direct_evaluator(const Limits& limits) {
  return [limits](const MonomialIdeal& I) { return regularity(I, limits); };
}

// ---------------------------------------------------------------------------
// Regularity sequences

std::optional<LinearFit> detect_linear_tail(std::span<const std::int64_t> values, unsigned first_p,
                                            unsigned min_equal_differences) {
  if (values.size() < 2) return std::nullopt;
  const std::size_t last = values.size() - 1;
  const std::int64_t slope = values[last] - values[last - 1];
  std::size_t start = last - 1;
  while (start > 0 && values[start] - values[start - 1] == slope) --start;
  const std::size_t equal_differences = last - start;
  if (equal_differences < min_equal_differences || slope < 1) return std::nullopt;
  LinearFit fit;
  fit.slope = slope;
  fit.onset = first_p + static_cast<unsigned>(start);
  fit.intercept = values[start] - slope * static_cast<std::int64_t>(fit.onset);
  return fit;
}

const char* to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::ordinary: return "ordinary";
    case SequenceKind::symbolic: return "symbolic";
    case SequenceKind::closure: return "closure";
  }
  return "?";
}

bool RegularitySequence::violated() const {
  if (!generating_degree_bound_holds || !upper_bound_holds) return true;
  // The lower bound is a theorem for ordinary powers and their closures only.
  return kind != SequenceKind::symbolic && !lower_bound_holds;
}

namespace {

void require_scan_input(const MonomialIdeal& I, unsigned pmax) {
  if (I.is_zero() || I.is_unit()) throw DomainError("regularity scans need a proper nonzero ideal");
  if (pmax == 0) throw DomainError("regularity scans need pmax >= 1");
}

template <class PowerAt>
RegularitySequence run_scan(SequenceKind kind, const MonomialIdeal& I, unsigned pmax, const RegularityEvaluator& reg,
                            PowerAt power_at) {
  require_scan_input(I, pmax);
  RegularitySequence seq;
  seq.ideal = to_string(I);
  seq.kind = kind;
  for (unsigned p = 1; p <= pmax; ++p) {
    try {
      const MonomialIdeal J = power_at(p);
      const RegularityValue v = reg(J);
      const MonomialIdeal saturated = saturate_irrelevant(J);
      RegularityPoint point;
      point.p = p;
      point.module_reg = v.module_reg;
      point.sheaf_reg = v.sheaf_reg;
      point.generators = J.size();
      point.max_generator_degree = J.max_degree();
      point.saturation_max_generator_degree = saturated.is_unit() ? 0 : saturated.max_degree();
      seq.values.push_back(point);
    } catch (const CapExceeded& e) {
      seq.truncated_at = p;
      seq.truncation_reason = e.what();
      break;
    }
  }

  for (const auto& pt : seq.values) {
    if (pt.module_reg < static_cast<std::int64_t>(pt.max_generator_degree) ||
        pt.sheaf_reg < static_cast<std::int64_t>(pt.saturation_max_generator_degree))
      seq.generating_degree_bound_holds = false;
  }

  std::vector<std::int64_t> sheaf;
  for (const auto& pt : seq.values) sheaf.push_back(pt.sheaf_reg);
  seq.fit = detect_linear_tail(sheaf);
  if (seq.fit) {
    const auto d = seq.fit->slope;
    std::int64_t offset = sheaf.front() - d;
    for (const auto& pt : seq.values) offset = std::max(offset, pt.sheaf_reg - d * pt.p);
    seq.observed_offset = offset;
    for (const auto& pt : seq.values) {
      if (d * pt.p > pt.sheaf_reg) seq.lower_bound_holds = false;
      if (pt.sheaf_reg > d * pt.p + offset) seq.upper_bound_holds = false;
    }
  }
  return seq;
}

}  // namespace

RegularitySequence asymptotic_reg_scan(const MonomialIdeal& I, unsigned pmax, const RegularityEvaluator& reg,
                                       const Limits&) {
  std::optional<MonomialIdeal> current;
  return run_scan(SequenceKind::ordinary, I, pmax, reg, [&](unsigned) {
    current = current ? multiply(*current, I) : I;
    return *current;
  });
}

RegularitySequence symbolic_reg_scan(const MonomialIdeal& I, unsigned pmax, const RegularityEvaluator& reg,
                                     const Limits& limits) {
  require_radical_proper(I, "symbolic_reg_scan");
  const PrimeList primes = minimal_primes(I);
  return run_scan(SequenceKind::symbolic, I, pmax, reg,
                  [&](unsigned p) { return symbolic_power(I, primes, p, limits); });
}

RegularitySequence closure_reg_scan(const MonomialIdeal& I, unsigned pmax, const RegularityEvaluator& reg,
                                    const Limits& limits) {
  return run_scan(SequenceKind::closure, I, pmax, reg,
                  [&](unsigned p) { return integral_closure_power(I, p, limits); });
}

// ---------------------------------------------------------------------------
// Containment

const char* to_string(ContainmentMode mode) {
  switch (mode) {
    case ContainmentMode::symbolic_in_power: return "symbolic-in-power";
    case ContainmentMode::power_in_power: return "power-in-power";
    case ContainmentMode::closure_in_power: return "closure-in-power";
    case ContainmentMode::expression: return "expression";
  }
  return "?";
}

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::holds: return "holds";
    case Expectation::fails: return "fails";
    case Expectation::observation: return "observation";
  }
  return "?";
}

bool ContainmentReport::violated() const {
  if (!verdict && !witness_rechecked) return true;
  switch (query.expectation) {
    case Expectation::holds: return !verdict;
    case Expectation::fails: return verdict;
    case Expectation::observation: return false;
  }
  return false;
}

namespace {

bool naive_member(const Monomial& m, const MonomialIdeal& I) {
  return std::any_of(I.generators().begin(), I.generators().end(), [&](const Monomial& g) { return divides(g, m); });
}

}  // namespace

ContainmentReport check_containment(ContainmentQuery query, const MonomialIdeal& left, const MonomialIdeal& right,
                                    const std::optional<Monomial>& witness_hint,
                                    const std::function<bool(const Monomial&)>& left_oracle) {
  require_same_ambient(left, right);
  ContainmentReport report;
  report.query = std::move(query);
  report.left_generators = left.size();
  report.right_generators = right.size();

  std::optional<Monomial> witness;
  if (witness_hint && membership(*witness_hint, left) && !membership(*witness_hint, right)) witness = witness_hint;
  if (!witness) witness = first_non_member(left, right);

  report.verdict = !witness.has_value();
  if (witness) {
    const bool in_left = left_oracle ? left_oracle(*witness) : naive_member(*witness, left);
    report.witness_rechecked = in_left && !naive_member(*witness, right);
    report.witness = std::move(witness);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Family

FamilyParams::FamilyParams(std::size_t n_, std::size_t e_, unsigned t_) : n(n_), e(e_), t(t_) {
  if (e < 1 || e + 1 > n) throw DomainError("family parameters need 1 <= e <= n - 1");
  if (t < 1) throw DomainError("family parameters need t >= 1");
  if (n > 64) throw CapExceeded("family parameters support at most 64 variables");
  // Force the checked products now so later accessors cannot overflow.
  (void)ndt();
  (void)edt();
}

unsigned FamilyParams::nt() const { return checked_mul(static_cast<Exponent>(n), t); }
unsigned FamilyParams::ndt() const { return checked_mul(nt(), d()); }
unsigned FamilyParams::edt() const { return checked_mul(checked_mul(static_cast<Exponent>(e), d()), t); }

MonomialIdeal power_closed_form(const FamilyParams& params, const Limits& limits) {
  const std::size_t n = params.n;
  const Exponent bound = params.nt();
  const std::uint64_t degree = params.ndt();
  // Walk compositions of `degree` into n parts bounded by `bound`; the
  // count is at most the box volume, which is checked against the cap.
  ExponentBox box;
  box.upper.assign(n, bound);
  detail::check_box(box, limits, "closed-form power");
  std::vector<Monomial> gens;
  std::vector<Exponent> b(n, 0);
  auto recurse = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
    if (i + 1 == n) {
      if (remaining <= bound) {
        b[i] = static_cast<Exponent>(remaining);
        gens.emplace_back(b);
      }
      return;
    }
    const std::uint64_t rest_capacity = static_cast<std::uint64_t>(bound) * (n - i - 1);
    const Exponent lo = remaining > rest_capacity ? static_cast<Exponent>(remaining - rest_capacity) : 0;
    const Exponent hi = static_cast<Exponent>(std::min<std::uint64_t>(bound, remaining));
    for (Exponent v = lo; v <= hi; ++v) {
      b[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  recurse(recurse, 0, degree);
  return MonomialIdeal(n, std::move(gens));
}

GreedyTrace greedy_decompose(const Monomial& b, const FamilyParams& params) {
  const std::size_t n = params.n;
  const unsigned d = params.d();
  const unsigned nt = params.nt();
  if (b.nvars() != n) throw AmbientMismatch("greedy start vector has the wrong number of variables");
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i] > nt) {
      std::ostringstream os;
      os << "exponent bound violated: b_" << (i + 1) << " = " << b[i] << " exceeds nt = " << nt;
      throw DomainError(os.str());
    }
  }
  if (b.degree() != params.ndt()) {
    std::ostringstream os;
    os << "degree condition violated: exponents sum to " << b.degree() << ", expected ndt = " << params.ndt();
    throw DomainError(os.str());
  }

  GreedyTrace trace;
  trace.start = b;
  trace.states.push_back(b);
  std::vector<std::size_t> order(n);
  for (unsigned step = 0; step < nt; ++step) {
    const Monomial& state = trace.states.back();
    std::iota(order.begin(), order.end(), 0);
    // d largest coordinates; ties go to the lower index.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return state[x] > state[y]; });
    std::vector<Exponent> u(n, 0);
    std::vector<Exponent> next(state.exponents().begin(), state.exponents().end());
    for (unsigned k = 0; k < d; ++k) {
      const std::size_t i = order[k];
      if (next[i] == 0) throw Error("greedy step reached a zero among the d largest coordinates");
      u[i] = 1;
      --next[i];
    }
    trace.steps.emplace_back(std::move(u));
    trace.states.emplace_back(std::move(next));
  }
  return trace;
}

std::vector<std::string> trace_violations(const GreedyTrace& trace, const FamilyParams& params) {
  std::vector<std::string> out;
  const std::size_t n = params.n;
  const unsigned d = params.d();
  const unsigned nt = params.nt();
  auto fail = [&](std::size_t i, const std::string& what) {
    std::ostringstream os;
    os << "step " << i << ": " << what;
    out.push_back(os.str());
  };
  if (trace.steps.size() != nt) fail(trace.steps.size(), "expected exactly nt = " + std::to_string(nt) + " steps");
  if (trace.states.size() != trace.steps.size() + 1) {
    fail(0, "state count does not match step count");
    return out;
  }
  if (trace.states.front() != trace.start) fail(0, "first state differs from the start vector");
  Monomial product(n);
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    const Monomial& s = trace.states[i];
    const std::int64_t expected_sum = static_cast<std::int64_t>(params.ndt()) - static_cast<std::int64_t>(d * i);
    if (static_cast<std::int64_t>(s.degree()) != expected_sum) fail(i, "coordinate sum is not ndt - d i");
    const auto max_entry = *std::max_element(s.exponents().begin(), s.exponents().end());
    if (static_cast<std::int64_t>(max_entry) > static_cast<std::int64_t>(nt) - static_cast<std::int64_t>(i))
      fail(i, "largest coordinate exceeds nt - i");
    if (i == trace.steps.size()) break;
    const Monomial& u = trace.steps[i];
    if (!u.is_squarefree() || u.degree() != d) fail(i, "step vector is not a 0/1 vector of weight d");
    if (!divides(u, s)) fail(i, "step vector does not fit under the state");
    else if (quotient(s, u) != trace.states[i + 1]) fail(i, "next state is not state minus step");
    product = product * u;
  }
  if (!trace.states.back().is_one()) fail(trace.steps.size(), "final state is not zero");
  if (product != trace.start) fail(trace.steps.size(), "product of steps does not reproduce the start monomial");
  return out;
}

namespace {

std::string family_text(const FamilyParams& p) {
  return "arrangement(" + std::to_string(p.n) + ", " + std::to_string(p.e) + ")";
}

std::string wrap(const char* op, const std::string& inner, unsigned k) {
  return std::string(op) + "(" + inner + ", " + std::to_string(k) + ")";
}

}  // namespace

std::vector<ContainmentReport> family_containments(const FamilyParams& params, const Limits& limits) {
  const MonomialIdeal I = coordinate_arrangement_ideal(params.n, params.e);
  const PrimeList primes = minimal_primes(I);
  const unsigned r = params.edt();
  const unsigned nt = params.nt();
  const MonomialIdeal left = symbolic_power(I, primes, r, limits);
  const auto oracle = [&](const Monomial& m) { return symbolic_membership(m, primes, r); };
  const std::string text = family_text(params);

  std::vector<ContainmentReport> out;

  ContainmentQuery strict;
  strict.label = "(i) symbolic power escapes the next ordinary power";
  strict.left = wrap("symbolic", text, r);
  strict.right = wrap("power", text, nt + 1);
  strict.r = r;
  strict.m = nt + 1;
  strict.mode = ContainmentMode::symbolic_in_power;
  strict.expectation = Expectation::fails;
  const Monomial y = pow(indicator(params.n, params.n == 64 ? ~0ULL : (1ULL << params.n) - 1), params.d() * params.t);
  out.push_back(check_containment(strict, left, power(I, nt + 1), y, oracle));

  ContainmentQuery inside;
  inside.label = "(ii) symbolic power inside the ordinary power";
  inside.left = wrap("symbolic", text, r);
  inside.right = wrap("power", text, nt);
  inside.r = r;
  inside.m = nt;
  inside.mode = ContainmentMode::symbolic_in_power;
  inside.expectation = Expectation::holds;
  for (const auto& g : left.generators())
    if (!oracle(g)) throw Error("symbolic power generator fails the per-prime exponent test");
  out.push_back(check_containment(inside, left, power(I, nt), std::nullopt, oracle));
  return out;
}

// ---------------------------------------------------------------------------
// Scans

std::vector<ContainmentReport> els_scan(const MonomialIdeal& I, unsigned pmax, const Limits& limits) {
  require_radical_proper(I, "els_scan");
  const PrimeList primes = minimal_primes(I);
  const unsigned h = big_height(primes);
  const std::string text = to_string(I);
  std::vector<ContainmentReport> out;
  MonomialIdeal ordinary = I;
  for (unsigned p = 1; p <= pmax; ++p) {
    if (p > 1) ordinary = multiply(ordinary, I);
    const unsigned r = checked_mul(h, p);
    ContainmentQuery q;
    q.label = "big height " + std::to_string(h) + ", p = " + std::to_string(p);
    q.left = wrap("symbolic", text, r);
    q.right = wrap("power", text, p);
    q.r = r;
    q.m = p;
    q.mode = ContainmentMode::symbolic_in_power;
    q.expectation = Expectation::holds;
    out.push_back(check_containment(q, symbolic_power(I, primes, r, limits), ordinary, std::nullopt,
                                    [&](const Monomial& m) { return symbolic_membership(m, primes, r); }));
  }
  return out;
}

std::vector<ContainmentReport> harbourne_scan(const MonomialIdeal& I, unsigned mmax, const Limits& limits) {
  require_radical_proper(I, "harbourne_scan");
  const PrimeList primes = minimal_primes(I);
  const unsigned h = big_height(primes);
  const std::string text = to_string(I);
  std::vector<ContainmentReport> out;
  MonomialIdeal ordinary = I;
  for (unsigned m = 1; m <= mmax; ++m) {
    if (m > 1) ordinary = multiply(ordinary, I);
    const unsigned threshold = checked_mul(h, m) - (h - 1);
    for (unsigned r : {threshold, threshold - 1}) {
      if (r == 0) continue;
      ContainmentQuery q;
      q.label = r == threshold ? "threshold r = hm - h + 1" : "probe r = hm - h";
      q.left = wrap("symbolic", text, r);
      q.right = wrap("power", text, m);
      q.r = r;
      q.m = m;
      q.mode = ContainmentMode::symbolic_in_power;
      q.expectation = r == threshold ? Expectation::holds : Expectation::observation;
      out.push_back(check_containment(q, symbolic_power(I, primes, r, limits), ordinary, std::nullopt,
                                      [&](const Monomial& x) { return symbolic_membership(x, primes, r); }));
    }
  }
  return out;
}

RatioScan ratio_scan(std::size_t n, std::size_t e, unsigned rmax, unsigned mmax, const Limits& limits) {
  const FamilyParams shape(n, e, 1);
  const unsigned d = shape.d();
  const MonomialIdeal I = coordinate_arrangement_ideal(n, e);
  const PrimeList primes = minimal_primes(I);
  const std::string text = family_text(shape);

  RatioScan scan;
  scan.n = n;
  scan.e = e;
  for (unsigned m = 1; m <= mmax; ++m) {
    // r n >= e d m  <=>  r >= ceil(e d m / n)
    const std::uint64_t need = static_cast<std::uint64_t>(e) * d * m;
    scan.thresholds.push_back({m, static_cast<unsigned>((need + n - 1) / n)});
  }

  std::vector<MonomialIdeal> ordinary;
  ordinary.push_back(I);
  for (unsigned m = 2; m <= mmax; ++m) ordinary.push_back(multiply(ordinary.back(), I));
  for (unsigned r = 1; r <= rmax; ++r) {
    const MonomialIdeal left = symbolic_power(I, primes, r, limits);
    for (unsigned m = 1; m <= mmax; ++m) {
      const bool criterion = static_cast<std::uint64_t>(r) * n >= static_cast<std::uint64_t>(e) * d * m;
      ContainmentQuery q;
      q.label = criterion ? "r n / e >= d m" : "r n / e < d m";
      q.left = wrap("symbolic", text, r);
      q.right = wrap("power", text, m);
      q.r = r;
      q.m = m;
      q.mode = ContainmentMode::symbolic_in_power;
      q.expectation = criterion ? Expectation::holds : Expectation::observation;
      scan.reports.push_back(check_containment(q, left, ordinary[m - 1], std::nullopt,
                                               [&](const Monomial& x) { return symbolic_membership(x, primes, r); }));
    }
  }
  return scan;
}

// ---------------------------------------------------------------------------
// Degree bound

bool BelReport::violated() const {
  return hypotheses_asserted && std::any_of(points.begin(), points.end(), [](const BelPoint& p) { return !p.holds; });
}

BelReport bel_bound_check(const MonomialIdeal& I, std::vector<std::int64_t> degrees, std::size_t codimension,
                          unsigned pmax, bool hypotheses_asserted, const RegularityEvaluator& reg) {
  if (I.is_zero() || I.is_unit()) throw DomainError("bel_bound_check needs a proper nonzero ideal");
  if (codimension < 1) throw DomainError("codimension must be at least 1");
  if (degrees.size() < codimension) throw DomainError("need at least as many cutting degrees as the codimension");
  if (std::any_of(degrees.begin(), degrees.end(), [](std::int64_t d) { return d < 1; }))
    throw DomainError("cutting degrees must be positive");
  std::sort(degrees.begin(), degrees.end(), std::greater<>());

  BelReport report;
  report.degrees = degrees;
  report.codimension = codimension;
  report.hypotheses_asserted = hypotheses_asserted;
  const std::int64_t tail =
      std::accumulate(degrees.begin() + 1, degrees.begin() + static_cast<std::ptrdiff_t>(codimension), std::int64_t{0}) -
      static_cast<std::int64_t>(codimension) + 1;
  MonomialIdeal current = I;
  for (unsigned p = 1; p <= pmax; ++p) {
    if (p > 1) current = multiply(current, I);
    const RegularityValue v = reg(current);
    BelPoint pt;
    pt.p = p;
    pt.sheaf_reg = v.sheaf_reg;
    pt.module_reg = v.module_reg;
    pt.bound = static_cast<std::int64_t>(p) * degrees.front() + tail;
    pt.holds = pt.sheaf_reg <= pt.bound;
    pt.slack = pt.bound - pt.sheaf_reg;
    report.points.push_back(pt);
  }
  return report;
}

}  // namespace regpow
