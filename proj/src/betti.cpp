#include "regpow/betti.hpp"

#include <algorithm>
#include <unordered_set>

#include "regpow/error.hpp"

namespace regpow {

namespace {

bool entry_less(const BettiEntry& a, const BettiEntry& b) {
  if (a.homological != b.homological) return a.homological < b.homological;
  return grlex_less(a.multidegree, b.multidegree);
}

void require_proper_nonzero(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("Betti numbers of the zero ideal are not defined here");
  if (I.is_unit()) throw DomainError("Betti numbers need a proper ideal");
}

// Betti entries contributed by one multidegree.
void append_entries(const MonomialIdeal& I, const Monomial& a, std::vector<BettiEntry>& out) {
  const auto ranks = reduced_homology_ranks(upper_koszul(I, a));
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] != 0) out.push_back({static_cast<unsigned>(i), a, ranks[i]});
}

}  // namespace

BettiTable::BettiTable(std::size_t nvars, std::vector<BettiEntry> entries)
    : nvars_(nvars), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), entry_less);
}

std::map<std::pair<unsigned, std::uint64_t>, std::size_t> BettiTable::graded() const {
  std::map<std::pair<unsigned, std::uint64_t>, std::size_t> out;
  for (const auto& e : entries_) out[{e.homological, e.multidegree.degree()}] += e.rank;
  return out;
}

std::size_t BettiTable::total_rank(unsigned homological) const {
  std::size_t r = 0;
  for (const auto& e : entries_)
    if (e.homological == homological) r += e.rank;
  return r;
}

std::int64_t BettiTable::regularity() const {
  std::int64_t reg = 0;
  bool first = true;
  for (const auto& e : entries_) {
    const auto v = static_cast<std::int64_t>(e.multidegree.degree()) - static_cast<std::int64_t>(e.homological);
    reg = first ? v : std::max(reg, v);
    first = false;
  }
  return reg;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& e : entries_) pd = std::max(pd, static_cast<int>(e.homological));
  return pd;
}

std::vector<Monomial> lcm_closure(const MonomialIdeal& I, const Limits& limits) {
  if (I.is_zero()) throw DomainError("the lcm closure of the zero ideal is empty");
  std::unordered_set<Monomial, MonomialHash> seen(I.generators().begin(), I.generators().end());
  std::vector<Monomial> frontier(I.generators().begin(), I.generators().end());
  // Every lcm of a subset is an iterated join with single generators.
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& x : frontier) {
      for (const auto& g : I.generators()) {
        Monomial j = lcm(x, g);
        if (seen.insert(j).second) {
          if (seen.size() > limits.lcm_closure_cap)
            throw CapExceeded("lcm closure exceeds the cap of " + std::to_string(limits.lcm_closure_cap) +
                              " multidegrees");
          next.push_back(std::move(j));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& a) {
  require_same_ambient(a, I);
  const Face support = a.support_mask();
  std::vector<Face> faces;
  Face b = support;
  while (true) {
    std::vector<Exponent> e(a.exponents().begin(), a.exponents().end());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (b >> i & 1U) --e[i];
    if (membership(Monomial(std::move(e)), I)) faces.push_back(b);
    if (b == 0) break;
    b = (b - 1) & support;
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

BettiTable betti_table(const MonomialIdeal& I, const Limits& limits) {
  require_proper_nonzero(I);
  const auto closure = lcm_closure(I, limits);
  const auto count = static_cast<std::ptrdiff_t>(closure.size());
  std::vector<std::vector<BettiEntry>> slots(closure.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < count; ++k) append_entries(I, closure[k], slots[k]);
  std::vector<BettiEntry> entries;
  for (auto& s : slots) entries.insert(entries.end(), s.begin(), s.end());
  return BettiTable(I.nvars(), std::move(entries));
}

namespace serial {

BettiTable betti_table(const MonomialIdeal& I, const Limits& limits) {
  require_proper_nonzero(I);
  std::vector<BettiEntry> entries;
  for (const auto& a : lcm_closure(I, limits)) append_entries(I, a, entries);
  return BettiTable(I.nvars(), std::move(entries));
}

}  // namespace serial

std::int64_t module_regularity(const MonomialIdeal& I, const Limits& limits) {
  if (I.is_zero()) throw DomainError("regularity of the zero ideal is not defined");
  if (I.is_unit()) return 0;
  return betti_table(I, limits).regularity();
}

RegularityValue regularity(const MonomialIdeal& I, const Limits& limits) {
  RegularityValue v;
  v.module_reg = module_regularity(I, limits);
  const MonomialIdeal saturated = saturate_irrelevant(I);
  v.sheaf_reg = saturated == I ? v.module_reg : module_regularity(saturated, limits);
  return v;
}

}  // namespace regpow
