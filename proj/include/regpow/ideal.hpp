#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regpow/monomial.hpp"

namespace regpow {

/// A monomial ideal in a fixed polynomial ring, held as its unique minimal
/// generating set in grlex order. Two equal ideals have identical storage.
///
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  /// Minimalizes `generators`; every generator must have `nvars` entries.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::size_t nvars);
  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal principal(const Monomial& m);
  /// The coordinate prime (x_i : i in vars).
  static MonomialIdeal prime(std::size_t nvars, std::span<const std::size_t> vars);

  std::size_t nvars() const { return nvars_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;
  std::uint64_t max_degree() const;
  std::uint64_t min_degree() const;

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  struct Canonical {};
  MonomialIdeal(Canonical, std::size_t nvars, std::vector<Monomial> minimal);

  std::size_t nvars_;
  std::vector<Monomial> gens_;

  friend MonomialIdeal minimalize(std::vector<Monomial> generators, std::size_t nvars);
};

/// Unique minimal generating set of the ideal generated by `generators`.
MonomialIdeal minimalize(std::vector<Monomial> generators, std::size_t nvars);

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b);
void require_same_ambient(const Monomial& m, const MonomialIdeal& I);

bool membership(const Monomial& m, const MonomialIdeal& I);

/// I ⊆ J, checked generator by generator in parallel.
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);
/// The grlex-first generator of I outside J, if any.
std::optional<Monomial> first_non_member(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^p by iterated multiplication with minimalization after each step.
MonomialIdeal power(const MonomialIdeal& I, unsigned p);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
/// Folds pairwise, always intersecting the two ideals with fewest generators.
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
/// I : m.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
/// I : x_var^infinity (0-based variable index).
MonomialIdeal saturate_variable(const MonomialIdeal& I, std::size_t var);
/// I : (x_1,...,x_n)^infinity.
MonomialIdeal saturate_irrelevant(const MonomialIdeal& I);
MonomialIdeal radical(const MonomialIdeal& I);

/// "ideal(x1*x2, x2*x3)"; the zero ideal prints as "ideal()".
std::string to_string(const MonomialIdeal& I);

namespace serial {
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);
std::optional<Monomial> first_non_member(const MonomialIdeal& I, const MonomialIdeal& J);
}  // namespace serial

}  // namespace regpow
