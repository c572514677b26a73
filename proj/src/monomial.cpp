#include "regpow/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "regpow/error.hpp"

namespace regpow {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent overflow in addition");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent overflow in multiplication");
  return out;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exp_) d += e;  // cannot overflow: < 2^32 entries of < 2^32
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::support_mask() const {
  if (exp_.size() > 64) throw CapExceeded("support masks need at most 64 variables");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > 0) mask |= std::uint64_t{1} << i;
  return mask;
}

Monomial Monomial::with_exponent(std::size_t var, Exponent value) const {
  if (var >= exp_.size()) throw DomainError("variable index out of range");
  Monomial out = *this;
  out.exp_[var] = value;
  return out;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Exponent e : exp_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    std::ostringstream os;
    os << "monomials live in " << a.nvars() << " and " << b.nvars() << " variables";
    throw AmbientMismatch(os.str());
  }
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw DomainError("quotient requires divisibility");
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

Monomial squarefree_part(const Monomial& m) {
  std::vector<Exponent> e(m.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial pow(const Monomial& m, unsigned k) {
  std::vector<Exponent> e(m.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(m[i], k);
  return Monomial(std::move(e));
}

Monomial indicator(std::size_t nvars, std::uint64_t mask) {
  std::vector<Exponent> e(nvars, 0);
  for (std::size_t i = 0; i < nvars && i < 64; ++i)
    if (mask >> i & 1U) e[i] = 1;
  return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                      [](Exponent x, Exponent y) { return x > y; });
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
  if (first) return "1";
  return os.str();
}

}  // namespace regpow
