#pragma once

#include <optional>

#include "regpow/feasibility.hpp"
#include "regpow/ideal.hpp"
#include "regpow/parallel.hpp"

namespace regpow {

/// x^a lies in the integral closure of I^p iff a dominates a point of
/// p * conv(exponents of I). Decided by exact rational feasibility.
bool integral_closure_membership(const Monomial& m, const MonomialIdeal& I, unsigned p);

/// The weights witnessing membership, if any.
std::optional<RationalVector> integral_closure_certificate(const Monomial& m, const MonomialIdeal& I, unsigned p);

/// Minimal generators of the integral closure of I^p. Every minimal
/// generator a satisfies a_i <= p * max_g g_i, so the search box is exact.
MonomialIdeal integral_closure_power(const MonomialIdeal& I, unsigned p, const Limits& limits = {});

namespace serial {
MonomialIdeal integral_closure_power(const MonomialIdeal& I, unsigned p, const Limits& limits = {});
}

}  // namespace regpow
