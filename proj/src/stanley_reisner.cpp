#include "regpow/stanley_reisner.hpp"

#include <algorithm>
#include <sstream>

#include "regpow/box.hpp"
#include "regpow/error.hpp"

namespace regpow {

namespace {

VariableSet mask_to_set(std::uint64_t mask) {
  VariableSet s;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) s.push_back(i);
  return s;
}

std::uint64_t set_to_mask(const VariableSet& s) {
  std::uint64_t m = 0;
  for (auto v : s) m |= std::uint64_t{1} << v;
  return m;
}

bool shortlex_less(const VariableSet& a, const VariableSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class CoverSearch {
 public:
  explicit CoverSearch(std::vector<std::uint64_t> edges) : edges_(std::move(edges)) {}

  std::vector<std::uint64_t> run() {
    visit(0, 0);
    return found_;
  }

 private:
  bool dominated(std::uint64_t cover) const {
    return std::any_of(found_.begin(), found_.end(), [&](std::uint64_t c) { return (c & ~cover) == 0; });
  }

  bool minimal(std::uint64_t cover) const {
    for (std::uint64_t rest = cover; rest != 0; rest &= rest - 1) {
      const std::uint64_t v = rest & (~rest + 1);
      const bool has_private_edge =
          std::any_of(edges_.begin(), edges_.end(), [&](std::uint64_t e) { return (e & cover) == v; });
      if (!has_private_edge) return false;
    }
    return true;
  }

  void visit(std::uint64_t cover, std::uint64_t excluded) {
    if (dominated(cover)) return;
    const auto open = std::find_if(edges_.begin(), edges_.end(), [&](std::uint64_t e) { return (e & cover) == 0; });
    if (open == edges_.end()) {
      if (minimal(cover)) found_.push_back(cover);
      return;
    }
    std::uint64_t branch_excluded = excluded;
    for (std::uint64_t rest = *open & ~excluded; rest != 0; rest &= rest - 1) {
      const std::uint64_t v = rest & (~rest + 1);
      visit(cover | v, branch_excluded);
      branch_excluded |= v;
    }
  }

  std::vector<std::uint64_t> edges_;
  std::vector<std::uint64_t> found_;
};

void require_positive(unsigned p) {
  if (p == 0) throw DomainError("symbolic powers need p >= 1");
}

}  // namespace

PrimeList::PrimeList(std::vector<VariableSet> primes) : primes_(std::move(primes)) {
  for (auto& P : primes_) {
    std::sort(P.begin(), P.end());
    P.erase(std::unique(P.begin(), P.end()), P.end());
    if (P.empty()) throw DomainError("a coordinate prime needs at least one variable");
  }
  std::sort(primes_.begin(), primes_.end(), shortlex_less);
  for (std::size_t a = 0; a < primes_.size(); ++a)
    for (std::size_t b = 0; b < primes_.size(); ++b)
      if (a != b && std::includes(primes_[b].begin(), primes_[b].end(), primes_[a].begin(), primes_[a].end()))
        throw DomainError("prime list is not an antichain");
}

bool PrimeList::covers(const MonomialIdeal& I) const {
  for (const auto& P : primes_) {
    const auto pm = set_to_mask(P);
    for (const auto& g : I.generators())
      if ((g.support_mask() & pm) == 0) return false;
  }
  return true;
}

void require_radical_proper(const MonomialIdeal& I, const char* what) {
  if (I.is_zero() || I.is_unit()) throw DomainError(std::string(what) + " needs a proper nonzero ideal");
  if (!I.is_squarefree()) throw DomainError(std::string(what) + " needs a squarefree monomial ideal");
  if (I.nvars() > 64) throw CapExceeded(std::string(what) + " supports at most 64 variables");
}

PrimeList minimal_primes(const MonomialIdeal& I) {
  require_radical_proper(I, "minimal_primes");
  std::vector<std::uint64_t> edges;
  for (const auto& g : I.generators()) edges.push_back(g.support_mask());
  std::vector<VariableSet> primes;
  for (auto c : CoverSearch(std::move(edges)).run()) primes.push_back(mask_to_set(c));
  return PrimeList(std::move(primes));
}

MonomialIdeal prime_power(std::size_t nvars, const VariableSet& vars, unsigned p) {
  return power(MonomialIdeal::prime(nvars, vars), p);
}

bool symbolic_membership(const Monomial& m, const PrimeList& primes, unsigned p) {
  require_positive(p);
  for (const auto& P : primes.primes()) {
    std::uint64_t s = 0;
    for (auto v : P) {
      if (v >= m.nvars()) throw AmbientMismatch("prime variable outside the monomial's ring");
      s += m[v];
    }
    if (s < p) return false;
  }
  return true;
}

bool symbolic_membership(const Monomial& m, const MonomialIdeal& I, unsigned p) {
  require_same_ambient(m, I);
  return symbolic_membership(m, minimal_primes(I), p);
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, const PrimeList& primes, unsigned p, const Limits& limits) {
  require_positive(p);
  ExponentBox box;
  box.upper.assign(I.nvars(), 0);
  for (const auto& P : primes.primes())
    for (auto v : P) box.upper[v] = p;
  const auto member = [&](const Monomial& a) { return symbolic_membership(a, primes, p); };
  return MonomialIdeal(I.nvars(), minimal_members_in_box(box, member, limits, "symbolic power"));
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned p, const Limits& limits) {
  return symbolic_power(I, minimal_primes(I), p, limits);
}

unsigned big_height(const PrimeList& primes) {
  std::size_t h = 0;
  for (const auto& P : primes.primes()) h = std::max(h, P.size());
  return static_cast<unsigned>(h);
}

unsigned big_height(const MonomialIdeal& I) { return big_height(minimal_primes(I)); }

namespace {
void require_family_range(std::size_t n, std::size_t e) {
  if (e < 1 || e + 1 > n) {
    std::ostringstream os;
    os << "arrangement(" << n << "," << e << ") needs 1 <= e <= n - 1";
    throw DomainError(os.str());
  }
  if (n > 64) throw CapExceeded("arrangement ideals support at most 64 variables");
}

// All k-subsets of {0..n-1} as masks, in lexicographic order of index lists.
std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}
}  // namespace

MonomialIdeal coordinate_arrangement_ideal(std::size_t n, std::size_t e) {
  require_family_range(n, e);
  std::vector<Monomial> gens;
  for (auto mask : subsets_of_size(n, n - e + 1)) gens.push_back(indicator(n, mask));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal coordinate_arrangement_by_intersection(std::size_t n, std::size_t e) {
  require_family_range(n, e);
  std::vector<MonomialIdeal> primes;
  for (auto mask : subsets_of_size(n, e)) primes.push_back(MonomialIdeal::prime(n, mask_to_set(mask)));
  return intersect(primes);
}

namespace serial {

MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned p) {
  require_positive(p);
  std::vector<MonomialIdeal> powers;
  const auto primes = minimal_primes(I);
  for (const auto& P : primes.primes()) powers.push_back(prime_power(I.nvars(), P, p));
  return intersect(powers);
}

}  // namespace serial

}  // namespace regpow
