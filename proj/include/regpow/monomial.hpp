#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace regpow {

using Exponent = std::uint32_t;

/// A monomial x^a in a fixed number of variables, stored as its exponent
/// vector. Variables are indexed from 0 internally ("x1" is index 0).
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exp_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exp_(exponents) {}

  std::size_t nvars() const { return exp_.size(); }
  Exponent operator[](std::size_t i) const { return exp_[i]; }
  std::span<const Exponent> exponents() const { return exp_; }

  /// Total degree, checked against overflow.
  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  /// Bitmask of variables with positive exponent (requires nvars <= 64).
  std::uint64_t support_mask() const;

  Monomial with_exponent(std::size_t var, Exponent value) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<Exponent> exp_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Throws AmbientMismatch when the lengths differ.
void require_same_ambient(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Product with checked exponent addition.
Monomial operator*(const Monomial& a, const Monomial& b);
/// b / a; requires a | b.
Monomial quotient(const Monomial& b, const Monomial& a);
/// Exponents clamped to 1.
Monomial squarefree_part(const Monomial& m);
/// Power with checked arithmetic.
Monomial pow(const Monomial& m, unsigned k);
/// Squarefree monomial on the given variable mask.
Monomial indicator(std::size_t nvars, std::uint64_t mask);

/// Canonical total order: total degree ascending, then lexicographically
/// descending exponent vectors (x1^2 < x1*x2 < x2^2).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

/// "x1^2*x3", or "1" for the unit monomial.
std::string to_string(const Monomial& m);

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

}  // namespace regpow
