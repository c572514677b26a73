#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "regpow/ideal.hpp"
#include "regpow/parallel.hpp"
#include "regpow/simplicial.hpp"

namespace regpow {

struct BettiEntry {
  unsigned homological = 0;
  Monomial multidegree;
  std::size_t rank = 0;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Nonzero multigraded Betti numbers of a monomial ideal (as a module),
/// sorted by homological index, then grlex multidegree.
class BettiTable {
 public:
  BettiTable(std::size_t nvars, std::vector<BettiEntry> entries);

  std::size_t nvars() const { return nvars_; }
  const std::vector<BettiEntry>& entries() const { return entries_; }

  /// Coarsened to (i, total degree) -> rank.
  std::map<std::pair<unsigned, std::uint64_t>, std::size_t> graded() const;
  std::size_t total_rank(unsigned homological) const;
  /// max over entries of |a| - i; 0 for an empty table.
  std::int64_t regularity() const;
  /// Largest homological index present, -1 if empty.
  int projective_dimension() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t nvars_;
  std::vector<BettiEntry> entries_;
};

/// Closure of the generator exponents under componentwise max, sorted grlex.
std::vector<Monomial> lcm_closure(const MonomialIdeal& I, const Limits& limits = {});

/// Faces: squarefree b <= supp(a) with x^(a-b) in I, on vertices supp(a).
SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& a);

/// beta_{i,a}(I) = rank H~_{i-1}(upper_koszul(I, a)) over the lcm closure,
/// one multidegree per parallel task.
BettiTable betti_table(const MonomialIdeal& I, const Limits& limits = {});

struct RegularityValue {
  /// Regularity of I as a graded module.
  std::int64_t module_reg = 0;
  /// Module regularity of the irrelevant saturation of I; the regularity
  /// of the ideal sheaf.
  std::int64_t sheaf_reg = 0;

  friend bool operator==(const RegularityValue&, const RegularityValue&) = default;
};

/// Unit ideal: both values 0. Zero ideal: DomainError.
RegularityValue regularity(const MonomialIdeal& I, const Limits& limits = {});
/// Module regularity only.
std::int64_t module_regularity(const MonomialIdeal& I, const Limits& limits = {});

namespace serial {
BettiTable betti_table(const MonomialIdeal& I, const Limits& limits = {});
}

}  // namespace regpow
