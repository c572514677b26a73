#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace regpow {

/// A face is a bitmask over vertex labels 0..63.
using Face = std::uint64_t;

/// Finite abstract simplicial complex stored by its facets.
///
/// The void complex has no faces at all; the irrelevant complex has only
/// the empty face. They differ in reduced homology: the irrelevant complex
/// has rank 1 in dimension -1, the void complex is acyclic.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex irrelevant() { return from_facets({0}); }
  static SimplicialComplex from_facets(std::vector<Face> facets);
  /// Validates downward closure; throws DomainError if violated.
  static SimplicialComplex from_faces(std::vector<Face> faces);

  bool is_void() const { return facets_.empty(); }
  const std::vector<Face>& facets() const { return facets_; }
  /// All faces, sorted by size then value.
  std::vector<Face> faces() const;
  /// Highest face dimension; -1 for the irrelevant complex, -2 when void.
  int dimension() const;

  /// Relabels vertex i to perm[i].
  SimplicialComplex relabel(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Face> facets_;
};

/// Reduced simplicial homology ranks over Q. Entry k is the rank of
/// H~_{k-1}, so entry 0 is dimension -1. The void complex yields {0}.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& K);

/// Number of faces of each dimension, indexed like reduced_homology_ranks.
std::vector<std::size_t> face_counts(const SimplicialComplex& K);

/// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> M);

}  // namespace regpow
