#include "regpow/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "regpow/error.hpp"

namespace regpow {

namespace {

// Cheap rejection for divisibility tests: supp(a) ⊆ supp(b) is necessary.
std::uint64_t quick_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  const auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

bool divides_unchecked(const Monomial& a, const Monomial& b) {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : MonomialIdeal(minimalize(std::move(generators), nvars)) {}

MonomialIdeal::MonomialIdeal(Canonical, std::size_t nvars, std::vector<Monomial> minimal)
    : nvars_(nvars), gens_(std::move(minimal)) {}

MonomialIdeal MonomialIdeal::zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }

MonomialIdeal MonomialIdeal::principal(const Monomial& m) { return MonomialIdeal(m.nvars(), {m}); }

MonomialIdeal MonomialIdeal::prime(std::size_t nvars, std::span<const std::size_t> vars) {
  std::vector<Monomial> gens;
  for (std::size_t v : vars) {
    if (v >= nvars) throw DomainError("prime variable index out of range");
    gens.push_back(Monomial(nvars).with_exponent(v, 1));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::uint64_t MonomialIdeal::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::uint64_t MonomialIdeal::min_degree() const {
  // Generators are sorted by degree.
  return gens_.empty() ? 0 : gens_.front().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const { return membership(m, *this); }

MonomialIdeal minimalize(std::vector<Monomial> generators, std::size_t nvars) {
  if (nvars == 0) throw DomainError("a polynomial ring needs at least one variable");
  for (const auto& g : generators)
    if (g.nvars() != nvars) throw AmbientMismatch("generator length does not match the ambient ring");

  std::sort(generators.begin(), generators.end(), grlex_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  // In grlex order a divisor always precedes its multiples, so each
  // candidate only needs testing against the survivors kept so far.
  std::vector<Monomial> kept;
  std::vector<std::uint64_t> masks;
  for (auto& g : generators) {
    const auto mask = quick_mask(g);
    bool redundant = false;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if ((masks[k] & ~mask) != 0) continue;
      if (divides_unchecked(kept[k], g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(std::move(g));
      masks.push_back(mask);
    }
  }
  return MonomialIdeal(MonomialIdeal::Canonical{}, nvars, std::move(kept));
}

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) {
    std::ostringstream os;
    os << "ideals live in " << a.nvars() << " and " << b.nvars() << " variables";
    throw AmbientMismatch(os.str());
  }
}

void require_same_ambient(const Monomial& m, const MonomialIdeal& I) {
  if (m.nvars() != I.nvars()) {
    std::ostringstream os;
    os << "monomial in " << m.nvars() << " variables tested against an ideal in " << I.nvars();
    throw AmbientMismatch(os.str());
  }
}

bool membership(const Monomial& m, const MonomialIdeal& I) {
  require_same_ambient(m, I);
  const auto deg = m.degree();
  const auto mask = quick_mask(m);
  for (const auto& g : I.generators()) {
    if (g.degree() > deg) break;
    if ((quick_mask(g) & ~mask) != 0) continue;
    if (divides_unchecked(g, m)) return true;
  }
  return false;
}

namespace serial {

std::optional<Monomial> first_non_member(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  for (const auto& g : I.generators())
    if (!membership(g, J)) return g;
  return std::nullopt;
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) { return !serial::first_non_member(I, J).has_value(); }

}  // namespace serial

std::optional<Monomial> first_non_member(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  const auto gens = I.generators();
  const auto count = static_cast<std::ptrdiff_t>(gens.size());
  std::ptrdiff_t first = count;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    if (k < first && !membership(gens[k], J)) first = k;
  }
  if (first == count) return std::nullopt;
  return gens[first];
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) { return !serial::first_non_member(I, J).has_value(); }

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  std::vector<Monomial> products;
  products.reserve(I.size() * J.size());
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) products.push_back(f * g);
  return minimalize(std::move(products), I.nvars());
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  std::vector<Monomial> gens(I.generators().begin(), I.generators().end());
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return minimalize(std::move(gens), I.nvars());
}

MonomialIdeal power(const MonomialIdeal& I, unsigned p) {
  if (p == 0) return MonomialIdeal::unit(I.nvars());
  MonomialIdeal result = I;
  for (unsigned k = 1; k < p; ++k) result = multiply(result, I);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  std::vector<Monomial> lcms;
  lcms.reserve(I.size() * J.size());
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) lcms.push_back(lcm(f, g));
  return minimalize(std::move(lcms), I.nvars());
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of no ideals is undefined without an ambient ring");
  std::vector<MonomialIdeal> pending(ideals.begin(), ideals.end());
  for (const auto& J : pending) require_same_ambient(pending.front(), J);
  auto by_size = [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.size() > b.size(); };
  // Min-heap on generator count.
  std::make_heap(pending.begin(), pending.end(), by_size);
  while (pending.size() > 1) {
    std::pop_heap(pending.begin(), pending.end(), by_size);
    MonomialIdeal a = std::move(pending.back());
    pending.pop_back();
    std::pop_heap(pending.begin(), pending.end(), by_size);
    MonomialIdeal b = std::move(pending.back());
    pending.pop_back();
    pending.push_back(intersect(a, b));
    std::push_heap(pending.begin(), pending.end(), by_size);
  }
  return pending.front();
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  require_same_ambient(m, I);
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(quotient(g, gcd(g, m)));
  return minimalize(std::move(gens), I.nvars());
}

MonomialIdeal saturate_variable(const MonomialIdeal& I, std::size_t var) {
  if (var >= I.nvars()) throw DomainError("saturation variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(g.with_exponent(var, 0));
  return minimalize(std::move(gens), I.nvars());
}

MonomialIdeal saturate_irrelevant(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) return I;
  std::vector<MonomialIdeal> parts;
  parts.reserve(I.nvars());
  for (std::size_t i = 0; i < I.nvars(); ++i) parts.push_back(saturate_variable(I, i));
  return intersect(parts);
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(squarefree_part(g));
  return minimalize(std::move(gens), I.nvars());
}

std::string to_string(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "ideal(";
  bool first = true;
  for (const auto& g : I.generators()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(g);
  }
  os << ')';
  return os.str();
}

}  // namespace regpow
