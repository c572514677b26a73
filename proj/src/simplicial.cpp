#include "regpow/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "regpow/error.hpp"

namespace regpow {

namespace {

bool face_less(Face a, Face b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> facets;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces.size() && maximal; ++j)
      if (faces[j] != faces[i] && (faces[i] & ~faces[j]) == 0) maximal = false;
    if (maximal) facets.push_back(faces[i]);
  }
  return facets;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
  SimplicialComplex K;
  K.facets_ = maximal_faces(std::move(facets));
  return K;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (Face f : faces) {
    for (Face rest = f; rest != 0; rest &= rest - 1) {
      const Face sub = f & ~(rest & (~rest + 1));
      if (!std::binary_search(faces.begin(), faces.end(), sub, face_less))
        throw DomainError("face family is not closed under taking subsets");
    }
  }
  return from_facets(std::move(faces));
}

std::vector<Face> SimplicialComplex::faces() const {
  std::set<Face, decltype(&face_less)> all(&face_less);
  for (Face facet : facets_) {
    // Enumerate all submasks of the facet, including the empty face.
    Face sub = facet;
    while (true) {
      all.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  return {all.begin(), all.end()};
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (Face f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

SimplicialComplex SimplicialComplex::relabel(const std::vector<std::size_t>& perm) const {
  std::vector<Face> out;
  for (Face f : facets_) {
    Face g = 0;
    for (std::size_t i = 0; i < 64; ++i)
      if (f >> i & 1U) {
        if (i >= perm.size() || perm[i] >= 64) throw DomainError("relabeling does not cover every vertex");
        g |= Face{1} << perm[i];
      }
    out.push_back(g);
  }
  return from_facets(std::move(out));
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> M) {
  const std::size_t rows = M.size();
  if (rows == 0) return 0;
  const std::size_t cols = M.front().size();
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(M[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot], M[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = M[i][j] * M[rank][c] - M[i][c] * M[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        M[i][j] = std::move(v);
      }
      M[i][c] = 0;
    }
    previous = M[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> face_counts(const SimplicialComplex& K) {
  if (K.is_void()) return {0};
  std::vector<std::size_t> counts(static_cast<std::size_t>(K.dimension() + 2), 0);
  for (Face f : K.faces()) ++counts[static_cast<std::size_t>(std::popcount(f))];
  return counts;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& K) {
  if (K.is_void()) return {0};
  const auto faces = K.faces();
  const std::size_t top = static_cast<std::size_t>(K.dimension() + 1);  // largest face size
  std::vector<std::vector<Face>> by_size(top + 1);
  for (Face f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // boundary_rank[s] = rank of the boundary map from size-s to size-(s-1) faces.
  std::vector<std::size_t> boundary_rank(top + 2, 0);
  for (std::size_t s = 1; s <= top; ++s) {
    const auto& lower = by_size[s - 1];
    const auto& upper = by_size[s];
    std::map<Face, std::size_t> row_of;
    for (std::size_t r = 0; r < lower.size(); ++r) row_of[lower[r]] = r;
    std::vector<std::vector<mpz_class>> D(lower.size(), std::vector<mpz_class>(upper.size()));
    for (std::size_t c = 0; c < upper.size(); ++c) {
      int position = 0;
      for (Face rest = upper[c]; rest != 0; rest &= rest - 1, ++position) {
        const Face v = rest & (~rest + 1);
        D[row_of.at(upper[c] & ~v)][c] = (position % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[s] = bareiss_rank(std::move(D));
  }

  std::vector<std::size_t> ranks(top + 1);
  for (std::size_t s = 0; s <= top; ++s) ranks[s] = by_size[s].size() - boundary_rank[s] - boundary_rank[s + 1];
  return ranks;
}

}  // namespace regpow
