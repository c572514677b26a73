#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regpow/betti.hpp"
#include "regpow/ideal.hpp"
#include "regpow/parallel.hpp"

namespace regpow {

/// Computes the regularity pair of an ideal; scans take one so callers can
/// interpose a result cache.
using RegularityEvaluator = std::function<RegularityValue(const MonomialIdeal&)>;
RegularityEvaluator direct_evaluator(const Limits& limits = {});

// ---------------------------------------------------------------------------
// Regularity sequences

struct LinearFit {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
  /// First p of the linear tail.
  unsigned onset = 0;

  std::int64_t at(unsigned p) const { return slope * static_cast<std::int64_t>(p) + intercept; }
  friend bool operator==(const LinearFit&, const LinearFit&) = default;
};

/// Longest constant-difference tail of values[0..] taken at p = first_p, first_p+1, ...
/// Reported only with at least `min_equal_differences` equal consecutive
/// differences and a positive slope.
std::optional<LinearFit> detect_linear_tail(std::span<const std::int64_t> values, unsigned first_p = 1,
                                            unsigned min_equal_differences = 3);

enum class SequenceKind { ordinary, symbolic, closure };
const char* to_string(SequenceKind kind);

struct RegularityPoint {
  unsigned p = 0;
  std::int64_t module_reg = 0;
  std::int64_t sheaf_reg = 0;
  std::size_t generators = 0;
  std::uint64_t max_generator_degree = 0;
  std::uint64_t saturation_max_generator_degree = 0;
};

struct RegularitySequence {
  std::string ideal;
  SequenceKind kind = SequenceKind::ordinary;
  std::vector<RegularityPoint> values;
  /// Fit on sheaf regularity.
  std::optional<LinearFit> fit;
  /// Set when a budget stopped the scan before pmax.
  std::optional<unsigned> truncated_at;
  std::string truncation_reason;

  /// With a fit of slope d: e_obs = max_p (sheaf_reg(p) - d p).
  std::optional<std::int64_t> observed_offset;
  /// d p <= sheaf_reg(p) on every computed p.
  bool lower_bound_holds = true;
  /// sheaf_reg(p) <= d p + e_obs on every computed p.
  bool upper_bound_holds = true;
  /// module_reg >= max generating degree, and sheaf_reg >= max generating
  /// degree of the saturation, at every p.
  bool generating_degree_bound_holds = true;

  /// True when a property that must hold failed.
  bool violated() const;
};

RegularitySequence asymptotic_reg_scan(const MonomialIdeal& I, unsigned pmax, const RegularityEvaluator& reg,
                                       const Limits& limits = {});
RegularitySequence symbolic_reg_scan(const MonomialIdeal& I, unsigned pmax, const RegularityEvaluator& reg,
                                     const Limits& limits = {});
RegularitySequence closure_reg_scan(const MonomialIdeal& I, unsigned pmax, const RegularityEvaluator& reg,
                                    const Limits& limits = {});

// ---------------------------------------------------------------------------
// Containment

enum class ContainmentMode { symbolic_in_power, power_in_power, closure_in_power, expression };
const char* to_string(ContainmentMode mode);

/// What the experiment expects. `observation` verdicts are recorded without
/// judgment (sharpness probes, cases outside a criterion's hypothesis).
enum class Expectation { holds, fails, observation };
const char* to_string(Expectation e);

struct ContainmentQuery {
  std::string label;
  std::string left;
  std::string right;
  unsigned r = 0;
  unsigned m = 0;
  ContainmentMode mode = ContainmentMode::expression;
  Expectation expectation = Expectation::observation;
};

struct ContainmentReport {
  ContainmentQuery query;
  bool verdict = false;
  /// A member of the left side outside the right side; set iff verdict is false.
  std::optional<Monomial> witness;
  /// The witness passed an independent left-membership check and failed an
  /// independent right-membership check.
  bool witness_rechecked = false;
  std::size_t left_generators = 0;
  std::size_t right_generators = 0;

  bool violated() const;
};

/// Decides left ⊆ right. A witness hint is tried first; if it separates the
/// ideals it becomes the witness. `left_oracle` re-checks witnesses through
/// an independent membership route (defaults to generator divisibility).
ContainmentReport check_containment(ContainmentQuery query, const MonomialIdeal& left, const MonomialIdeal& right,
                                    const std::optional<Monomial>& witness_hint = std::nullopt,
                                    const std::function<bool(const Monomial&)>& left_oracle = {});

// ---------------------------------------------------------------------------
// The coordinate-arrangement family I = I(n, e), d = n - e + 1

struct FamilyParams {
  std::size_t n = 0;
  std::size_t e = 0;
  unsigned t = 0;

  /// Validates 1 <= e <= n - 1 and t >= 1.
  FamilyParams(std::size_t n, std::size_t e, unsigned t);
  unsigned d() const { return static_cast<unsigned>(n - e + 1); }
  unsigned nt() const;
  unsigned ndt() const;
  unsigned edt() const;
};

/// Generators x^b of I^{nt} given by sum b = ndt and 0 <= b_i <= nt.
MonomialIdeal power_closed_form(const FamilyParams& params, const Limits& limits = {});

struct GreedyTrace {
  Monomial start;
  /// u^i: indicator of the d largest coordinates of states[i].
  std::vector<Monomial> steps;
  /// states[0] = start, states[i + 1] = states[i] - steps[i].
  std::vector<Monomial> states;
};

/// Peels off the indicator of the d largest coordinates nt times. Throws
/// DomainError naming the violated condition when b is not of the form
/// sum b = ndt, b_i <= nt.
GreedyTrace greedy_decompose(const Monomial& b, const FamilyParams& params);
/// Every invariant of the trace that fails, as a readable message.
std::vector<std::string> trace_violations(const GreedyTrace& trace, const FamilyParams& params);

/// (i) I^{(edt)} ⊄ I^{nt+1} with witness (x1...xn)^{dt}; (ii) I^{(edt)} ⊆ I^{nt}.
std::vector<ContainmentReport> family_containments(const FamilyParams& params, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Containment scans over squarefree ideals

/// I^{(hp)} ⊆ I^p for p = 1..pmax with h the big height.
std::vector<ContainmentReport> els_scan(const MonomialIdeal& I, unsigned pmax, const Limits& limits = {});
/// I^{(hm - h + 1)} ⊆ I^m for m = 1..mmax, plus observational probes one below.
std::vector<ContainmentReport> harbourne_scan(const MonomialIdeal& I, unsigned mmax, const Limits& limits = {});

struct RatioThreshold {
  unsigned m = 0;
  /// Least r with r n / e >= d m.
  unsigned r_min = 0;
};

struct RatioScan {
  std::size_t n = 0;
  std::size_t e = 0;
  std::vector<RatioThreshold> thresholds;
  /// One report per (r, m); `holds` expected exactly when r n >= e d m.
  std::vector<ContainmentReport> reports;
};

RatioScan ratio_scan(std::size_t n, std::size_t e, unsigned rmax, unsigned mmax, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Degree bound reg I^p <= p d1 + d2 + ... + de - e + 1

struct BelPoint {
  unsigned p = 0;
  std::int64_t sheaf_reg = 0;
  std::int64_t module_reg = 0;
  std::int64_t bound = 0;
  bool holds = false;
  std::int64_t slack = 0;
};

struct BelReport {
  std::vector<std::int64_t> degrees;
  std::size_t codimension = 0;
  /// Caller-asserted: the subscheme is a local complete intersection with
  /// log canonical singularities. Never verified here.
  bool hypotheses_asserted = false;
  std::vector<BelPoint> points;

  /// A failure counts only when the hypotheses were asserted.
  bool violated() const;
};

/// Degrees are sorted descending; requires at least `codimension` of them.
BelReport bel_bound_check(const MonomialIdeal& I, std::vector<std::int64_t> degrees, std::size_t codimension,
                          unsigned pmax, bool hypotheses_asserted, const RegularityEvaluator& reg);

}  // namespace regpow
