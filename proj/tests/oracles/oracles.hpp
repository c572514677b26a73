// Slow reference implementations used only by tests. They work on plain
// exponent vectors and share no code with the library kernels.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "regpow/ideal.hpp"

namespace oracle {

using Vec = std::vector<unsigned>;

inline Vec vec(const regpow::Monomial& m) { return Vec(m.exponents().begin(), m.exponents().end()); }

inline std::vector<Vec> vecs(const regpow::MonomialIdeal& I) {
  std::vector<Vec> out;
  for (const auto& g : I.generators()) out.push_back(vec(g));
  return out;
}

inline regpow::MonomialIdeal ideal(std::size_t n, const std::vector<Vec>& gens) {
  std::vector<regpow::Monomial> ms;
  for (const auto& g : gens) ms.emplace_back(std::vector<regpow::Exponent>(g.begin(), g.end()));
  return regpow::MonomialIdeal(n, std::move(ms));
}

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const Vec& m, const std::vector<Vec>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Vec& g) { return divides(g, m); });
}

inline unsigned degree(const Vec& a) { return std::accumulate(a.begin(), a.end(), 0U); }

/// Quadratic minimalization, sorted as a set so comparisons ignore order.
inline std::set<Vec> minimal(const std::vector<Vec>& gens) {
  std::set<Vec> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j) continue;
      if (divides(gens[j], gens[i]) && (gens[j] != gens[i] || j < i)) keep = false;
    }
    if (keep) out.insert(gens[i]);
  }
  return out;
}

inline std::set<Vec> as_set(const regpow::MonomialIdeal& I) {
  const auto v = vecs(I);
  return {v.begin(), v.end()};
}

/// Every exponent vector a <= upper, visited in odometer order.
inline void for_box(const Vec& upper, const std::function<void(const Vec&)>& f) {
  Vec a(upper.size(), 0);
  while (true) {
    f(a);
    std::size_t i = 0;
    while (i < a.size() && a[i] == upper[i]) a[i++] = 0;
    if (i == a.size()) return;
    ++a[i];
  }
}

/// Minimal elements of the upward-closed set `pred` restricted to a box.
inline std::set<Vec> minimal_in_box(const Vec& upper, const std::function<bool(const Vec&)>& pred) {
  std::vector<Vec> members;
  for_box(upper, [&](const Vec& a) {
    if (pred(a)) members.push_back(a);
  });
  return minimal(members);
}

inline Vec join(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline Vec box_of(const std::vector<std::vector<Vec>>& ideals, std::size_t n) {
  Vec upper(n, 0);
  for (const auto& gens : ideals)
    for (const auto& g : gens) upper = join(upper, g);
  return upper;
}

inline std::set<Vec> intersection(const std::vector<Vec>& I, const std::vector<Vec>& J, std::size_t n) {
  return minimal_in_box(box_of({I, J}, n), [&](const Vec& a) { return member(a, I) && member(a, J); });
}

/// All products of p generators.
inline std::set<Vec> power(const std::vector<Vec>& I, unsigned p, std::size_t n) {
  std::vector<Vec> layer = {Vec(n, 0)};
  for (unsigned k = 0; k < p; ++k) {
    std::vector<Vec> next;
    for (const auto& a : layer)
      for (const auto& g : I) {
        Vec c = a;
        for (std::size_t i = 0; i < n; ++i) c[i] += g[i];
        next.push_back(std::move(c));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  const auto m = minimal(layer);
  return m;
}

/// Minimal vertex covers by trying every subset of variables.
inline std::vector<std::uint64_t> minimal_covers(const std::vector<Vec>& I, std::size_t n) {
  std::vector<std::uint64_t> covers;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (const auto& g : I) {
      bool hit = false;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0 && (s >> i & 1U)) hit = true;
      ok = ok && hit;
    }
    if (ok) covers.push_back(s);
  }
  std::vector<std::uint64_t> out;
  for (auto s : covers) {
    bool minimal_cover = true;
    for (auto t : covers)
      if (t != s && (t & s) == t) minimal_cover = false;
    if (minimal_cover) out.push_back(s);
  }
  return out;
}

/// Exponent sum over each minimal prime at least p.
inline bool symbolic_member(const Vec& a, const std::vector<Vec>& I, unsigned p, std::size_t n) {
  for (auto s : minimal_covers(I, n)) {
    unsigned sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1U) sum += a[i];
    if (sum < p) return false;
  }
  return true;
}

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> M) {
  std::size_t r = 0;
  const std::size_t cols = M.empty() ? 0 : M.front().size();
  for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
    std::size_t piv = r;
    while (piv < M.size() && M[piv][c] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[r]);
    for (std::size_t i = r + 1; i < M.size(); ++i) {
      if (M[i][c] == 0) continue;
      const mpq_class f = M[i][c] / M[r][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return r;
}

/// Reduced homology of a complex given by all faces (each face a sorted
/// vertex list, the empty face included). Entry k is dim H~_{k-1}.
inline std::vector<std::size_t> reduced_homology(const std::vector<std::vector<int>>& faces) {
  if (faces.empty()) return {0};
  std::map<std::size_t, std::vector<std::vector<int>>> by_size;
  std::size_t top = 0;
  for (const auto& f : faces) {
    by_size[f.size()].push_back(f);
    top = std::max(top, f.size());
  }
  // boundary from size s to size s - 1 for s = 1..top
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t s = 1; s <= top; ++s) {
    const auto& hi = by_size[s];
    const auto& lo = by_size[s - 1];
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < lo.size(); ++i) index[lo[i]] = i;
    std::vector<std::vector<mpq_class>> M(lo.size(), std::vector<mpq_class>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j)
      for (std::size_t k = 0; k < hi[j].size(); ++k) {
        auto f = hi[j];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        M[index.at(f)][j] = (k % 2 == 0) ? 1 : -1;
      }
    ranks[s] = rank(std::move(M));
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s <= top; ++s) {
    const std::size_t cycles = by_size[s].size() - ranks[s];
    out.push_back(cycles - ranks[s + 1]);
  }
  return out;
}

struct Betti {
  unsigned i;
  Vec degree;
  std::size_t rank;
  auto operator<=>(const Betti&) const = default;
};

/// Multigraded Betti numbers of I from the lcm lattice: beta_{i,b} is the
/// dimension of H~_{i-1} of the order complex of the open interval (1, b).
inline std::set<Betti> lcm_lattice_betti(const std::vector<Vec>& I, std::size_t n) {
  std::set<Vec> lattice;
  const std::size_t k = I.size();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
    Vec l(n, 0);
    for (std::size_t j = 0; j < k; ++j)
      if (s >> j & 1U) l = join(l, I[j]);
    lattice.insert(l);
  }
  const std::vector<Vec> elems(lattice.begin(), lattice.end());
  std::set<Betti> out;
  for (const auto& b : elems) {
    std::vector<int> below;
    for (std::size_t x = 0; x < elems.size(); ++x)
      if (elems[x] != b && divides(elems[x], b)) below.push_back(static_cast<int>(x));
    // chains of the open interval, grown by extending with larger elements
    std::vector<std::vector<int>> faces = {{}};
    std::vector<std::vector<int>> frontier = {{}};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& c : frontier)
        for (int x : below) {
          if (!c.empty() && !(divides(elems[c.back()], elems[x]) && elems[c.back()] != elems[x])) continue;
          auto d = c;
          d.push_back(x);
          next.push_back(d);
        }
      for (auto& c : next) {
        auto sorted = c;
        std::sort(sorted.begin(), sorted.end());
        faces.push_back(sorted);
      }
      frontier = std::move(next);
    }
    const auto h = reduced_homology(faces);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0) out.insert({static_cast<unsigned>(i), b, h[i]});
  }
  return out;
}

inline long long regularity(const std::set<Betti>& table) {
  long long reg = 0;
  bool first = true;
  for (const auto& e : table) {
    const long long v = static_cast<long long>(degree(e.degree)) - e.i;
    reg = first ? v : std::max(reg, v);
    first = false;
  }
  return reg;
}

/// I : (x1...xn)^infinity via membership of a * (x1...xn)^N with N large.
inline std::set<Vec> saturation(const std::vector<Vec>& I, std::size_t n) {
  unsigned big = 0;
  for (const auto& g : I) big = std::max(big, degree(g));
  // a is in the saturation iff x_i^big * x^a is in I for every i
  return minimal_in_box(box_of({I}, n), [&](const Vec& a) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec b = a;
      b[i] += big;
      if (!member(b, I)) return false;
    }
    return true;
  });
}

/// x^a in the integral closure of I^p: either x^{ka} in I^{kp} for some
/// small k (a witness of membership), or a small integer weight w with
/// w.a < p * min_g w.g (a witness of non-membership). Returns -1 when
/// neither search succeeds.
inline int closure_member(const Vec& a, const std::vector<Vec>& I, unsigned p, std::size_t n, unsigned kmax = 4,
                          unsigned wmax = 6) {
  for (unsigned k = 1; k <= kmax; ++k) {
    Vec ka = a;
    for (auto& x : ka) x *= k;
    // x^{ka} in I^{kp} iff some product of kp generators divides it
    std::vector<Vec> layer = {Vec(n, 0)};
    for (unsigned s = 0; s < k * p; ++s) {
      std::set<Vec> next;
      for (const auto& c : layer)
        for (const auto& g : I) {
          Vec d = c;
          bool fits = true;
          for (std::size_t i = 0; i < n; ++i) {
            d[i] += g[i];
            fits = fits && d[i] <= ka[i];
          }
          if (fits) next.insert(d);
        }
      layer.assign(next.begin(), next.end());
      if (layer.empty()) break;
    }
    if (!layer.empty()) return 1;
  }
  Vec w(n, 0);
  bool found = false;
  for_box(Vec(n, wmax), [&](const Vec& wt) {
    if (found) return;
    unsigned long long wa = 0;
    for (std::size_t i = 0; i < n; ++i) wa += static_cast<unsigned long long>(wt[i]) * a[i];
    unsigned long long best = ~0ULL;
    for (const auto& g : I) {
      unsigned long long wg = 0;
      for (std::size_t i = 0; i < n; ++i) wg += static_cast<unsigned long long>(wt[i]) * g[i];
      best = std::min(best, wg);
    }
    if (wa < p * best) found = true;
  });
  return found ? 0 : -1;
}

}  // namespace oracle
