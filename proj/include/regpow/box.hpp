#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regpow/error.hpp"
#include "regpow/monomial.hpp"
#include "regpow/parallel.hpp"

namespace regpow {

/// Axis-aligned box [0, upper] of exponent vectors, optionally cut by a
/// total-degree ceiling.
struct ExponentBox {
  std::vector<Exponent> upper;
  std::uint64_t max_degree = UINT64_MAX;

  /// Number of lattice points, or SIZE_MAX on overflow.
  std::size_t volume() const {
    std::size_t v = 1;
    for (Exponent u : upper) {
      if (__builtin_mul_overflow(v, static_cast<std::size_t>(u) + 1, &v)) return SIZE_MAX;
    }
    return v;
  }

  Monomial point(std::size_t linear) const {
    std::vector<Exponent> e(upper.size());
    for (std::size_t i = 0; i < upper.size(); ++i) {
      const std::size_t side = static_cast<std::size_t>(upper[i]) + 1;
      e[i] = static_cast<Exponent>(linear % side);
      linear /= side;
    }
    return Monomial(std::move(e));
  }
};

namespace detail {

inline void check_box(const ExponentBox& box, const Limits& limits, const char* what) {
  if (box.volume() > limits.enumeration_cap) {
    throw CapExceeded(std::string(what) + ": box of " +
                      (box.volume() == SIZE_MAX ? std::string("overflowing size")
                                                : std::to_string(box.volume()) + " points") +
                      " exceeds the enumeration cap of " + std::to_string(limits.enumeration_cap));
  }
}

/// a is a minimal element of the up-set `member` iff a belongs to it and no
/// a - e_i does.
template <class Member>
bool is_minimal_member(const Monomial& a, const Member& member) {
  if (!member(a)) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] == 0) continue;
    if (member(a.with_exponent(i, a[i] - 1))) return false;
  }
  return true;
}

}  // namespace detail

/// Minimal elements, inside `box`, of an up-closed set of exponent vectors
/// given by the predicate `member`. The caller guarantees every minimal
/// element lies in the box. Output is sorted in grlex order.
template <class Member>
std::vector<Monomial> minimal_members_in_box(const ExponentBox& box, const Member& member, const Limits& limits,
                                             const char* what = "box enumeration") {
  detail::check_box(box, limits, what);
  const auto count = static_cast<std::ptrdiff_t>(box.volume());
  std::vector<Monomial> found;
#pragma omp parallel
  {
    std::vector<Monomial> local;
#pragma omp for schedule(dynamic, 512) nowait
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      Monomial a = box.point(static_cast<std::size_t>(k));
      if (a.degree() > box.max_degree) continue;
      if (detail::is_minimal_member(a, member)) local.push_back(std::move(a));
    }
#pragma omp critical(regpow_box_merge)
    found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  std::sort(found.begin(), found.end(), grlex_less);
  return found;
}

namespace serial {

/// Odometer walk over the same box; the reference for the parallel kernel.
template <class Member>
std::vector<Monomial> minimal_members_in_box(const ExponentBox& box, const Member& member, const Limits& limits,
                                             const char* what = "box enumeration") {
  detail::check_box(box, limits, what);
  std::vector<Monomial> found;
  std::vector<Exponent> e(box.upper.size(), 0);
  while (true) {
    Monomial a(e);
    if (a.degree() <= box.max_degree && detail::is_minimal_member(a, member)) found.push_back(std::move(a));
    std::size_t i = 0;
    while (i < e.size() && e[i] == box.upper[i]) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  std::sort(found.begin(), found.end(), grlex_less);
  return found;
}

}  // namespace serial

}  // namespace regpow
