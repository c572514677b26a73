#include "regpow/integral_closure.hpp"

#include <algorithm>

#include "regpow/box.hpp"
#include "regpow/error.hpp"

namespace regpow {

namespace {

void require_positive(unsigned p) {
  if (p == 0) throw DomainError("integral closure powers need p >= 1");
}

// sum lambda_g deg(g) <= deg(a) with sum lambda_g = p forces deg(a) >= p * min deg.
bool degree_admits(const Monomial& m, const MonomialIdeal& I, unsigned p) {
  return m.degree() >= static_cast<std::uint64_t>(p) * I.min_degree();
}

ExponentBox closure_box(const MonomialIdeal& I, unsigned p) {
  ExponentBox box;
  box.upper.assign(I.nvars(), 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < I.nvars(); ++i) box.upper[i] = std::max(box.upper[i], g[i]);
  for (auto& u : box.upper) u = checked_mul(u, p);
  // Each coordinate of a minimal generator is the ceiling of a coordinate of
  // a point of degree <= p * maxdeg, so its degree is below that plus n.
  box.max_degree = static_cast<std::uint64_t>(p) * I.max_degree() + I.nvars() - 1;
  return box;
}

template <class Enumerate>
MonomialIdeal closure_power_with(const MonomialIdeal& I, unsigned p, const Limits& limits, Enumerate enumerate) {
  require_positive(p);
  if (I.is_zero() || I.is_unit()) return I;
  const auto member = [&](const Monomial& a) {
    return degree_admits(a, I, p) && newton_weights(a, I.generators(), p).has_value();
  };
  return MonomialIdeal(I.nvars(), enumerate(closure_box(I, p), member, limits, "integral closure"));
}

}  // namespace

bool integral_closure_membership(const Monomial& m, const MonomialIdeal& I, unsigned p) {
  return integral_closure_certificate(m, I, p).has_value();
}

std::optional<RationalVector> integral_closure_certificate(const Monomial& m, const MonomialIdeal& I, unsigned p) {
  require_same_ambient(m, I);
  require_positive(p);
  if (I.is_zero() || !degree_admits(m, I, p)) return std::nullopt;
  return newton_weights(m, I.generators(), p);
}

MonomialIdeal integral_closure_power(const MonomialIdeal& I, unsigned p, const Limits& limits) {
  return closure_power_with(I, p, limits, [](const auto&... args) { return minimal_members_in_box(args...); });
}

namespace serial {

MonomialIdeal integral_closure_power(const MonomialIdeal& I, unsigned p, const Limits& limits) {
  return closure_power_with(I, p, limits,
                            [](const auto&... args) { return serial::minimal_members_in_box(args...); });
}

}  // namespace serial

}  // namespace regpow
