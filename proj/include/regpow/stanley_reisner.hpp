#pragma once

#include <cstddef>
#include <vector>

#include "regpow/ideal.hpp"
#include "regpow/parallel.hpp"

namespace regpow {

/// Sorted 0-based variable indices naming the coordinate prime (x_i : i in set).
using VariableSet = std::vector<std::size_t>;

/// Minimal primes of a squarefree monomial ideal, equivalently the minimal
/// vertex covers of its generator-support hypergraph. Sorted by size, then
/// lexicographically.
class PrimeList {
 public:
  PrimeList() = default;
  explicit PrimeList(std::vector<VariableSet> primes);

  std::span<const VariableSet> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  /// True when every prime meets every generator support and no prime
  /// contains another.
  bool covers(const MonomialIdeal& I) const;

 private:
  std::vector<VariableSet> primes_;
};

/// Throws DomainError unless I is squarefree, proper and nonzero.
void require_radical_proper(const MonomialIdeal& I, const char* what);

/// Minimal vertex covers by branch and bound, pruning any branch whose
/// partial cover already contains a cover found earlier.
PrimeList minimal_primes(const MonomialIdeal& I);

/// The p-th power of the coordinate prime on `vars`.
MonomialIdeal prime_power(std::size_t nvars, const VariableSet& vars, unsigned p);

/// I^(p): monomials whose exponents sum to at least p over each minimal prime.
MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned p, const Limits& limits = {});
MonomialIdeal symbolic_power(const MonomialIdeal& I, const PrimeList& primes, unsigned p,
                             const Limits& limits = {});

bool symbolic_membership(const Monomial& m, const MonomialIdeal& I, unsigned p);
bool symbolic_membership(const Monomial& m, const PrimeList& primes, unsigned p);

/// Largest minimal-prime size (the big height).
unsigned big_height(const MonomialIdeal& I);
unsigned big_height(const PrimeList& primes);

/// Ideal of the union of all codimension-e coordinate subspaces of
/// affine n-space: all squarefree monomials of degree n - e + 1.
MonomialIdeal coordinate_arrangement_ideal(std::size_t n, std::size_t e);
/// The same ideal built as the intersection of the (n choose e) primes.
MonomialIdeal coordinate_arrangement_by_intersection(std::size_t n, std::size_t e);

namespace serial {
/// Literal intersection of p-th powers of the minimal primes.
MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned p);
}  // namespace serial

}  // namespace regpow
