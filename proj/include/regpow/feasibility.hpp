#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regpow/monomial.hpp"

namespace regpow {

/// Exact rational vector. GMP keeps every entry in lowest terms with a
/// positive denominator.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<mpq_class> entries);

  std::size_t size() const { return entries_.size(); }
  const mpq_class& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const mpq_class> entries() const { return entries_; }

  /// "[1/2, 1/2]"
  std::string to_string() const;

 private:
  std::vector<mpq_class> entries_;
};

/// Solves the system  A x = b,  x >= 0  exactly, where A is dense with
/// `rows` rows. Returns one feasible point or nullopt. Two-phase simplex
/// restricted to phase one, Bland's rule, GMP rationals throughout.
std::optional<RationalVector> solve_nonnegative(const std::vector<std::vector<mpq_class>>& A,
                                                const std::vector<mpq_class>& b);

/// Weights lambda_g >= 0 over `generators` with sum lambda_g = p and
/// sum lambda_g * g <= target componentwise; nullopt when none exist.
/// A point of the scaled Newton polyhedron certificate for x^target.
std::optional<RationalVector> newton_weights(const Monomial& target, std::span<const Monomial> generators,
                                             unsigned p);

}  // namespace regpow
