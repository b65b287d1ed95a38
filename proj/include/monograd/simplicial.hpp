#pragma once

#include <cstdint>
#include <vector>

#include "monograd/ideal.hpp"
#include "monograd/linalg.hpp"

namespace monograd {

/// Subset of [n] with bit k standing for vertex k+1. Complexes are limited to
/// 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

int cardinality(VertexMask w);
/// 1-based vertex list of a mask, ascending.
std::vector<int> vertices_of(VertexMask w);
VertexMask mask_of(const std::vector<int>& vertices);
/// Canonical face order: cardinality, then lexicographic on sorted vertex lists.
bool face_less(VertexMask a, VertexMask b);

/// A simplicial complex on [n] given by its minimal nonfaces.
///
/// The void complex (no faces at all) is encoded by the single minimal
/// nonface ∅; the complex {∅} has every vertex as a minimal nonface.
class SimplicialComplex {
 public:
  /// Reduces `nonfaces` to an inclusion antichain.
  SimplicialComplex(int n, std::vector<VertexMask> nonfaces);

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {0}); }

  int n() const { return n_; }
  const std::vector<VertexMask>& minimal_nonfaces() const { return nonfaces_; }
  bool is_void() const { return !nonfaces_.empty() && nonfaces_.front() == 0; }
  bool is_face(VertexMask w) const;

  /// Faces contained in `within`, canonically ordered, grouped by cardinality:
  /// result[k] lists the faces with k vertices.
  std::vector<std::vector<VertexMask>> faces_by_size(VertexMask within) const;
  std::vector<std::vector<VertexMask>> faces_by_size() const { return faces_by_size(full_mask()); }
  /// -1 for {∅}; -2 for the void complex.
  int dimension() const;

  VertexMask full_mask() const;

 private:
  int n_;
  std::vector<VertexMask> nonfaces_;
  // nonfaces containing each vertex, for incremental face tests.
  std::vector<std::vector<VertexMask>> by_vertex_;
};

/// Δ with I_Δ = I. Requires a squarefree ideal; the unit ideal gives the
/// void complex and the zero ideal the full simplex.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);
/// Inverse of stanley_reisner.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Δ_W relabeled to vertices 1..|W| in increasing order.
SimplicialComplex restrict(const SimplicialComplex& complex, VertexMask w);

/// Matrix of ∂_s : C_s -> C_{s-1}, where C_s is spanned by faces with s+1
/// vertices. Entry (F∖{p}, F) is (-1)^{#{q ∈ F : q < p}}. Rows and columns
/// follow face_less. Out-of-range s yields a matrix with zero rows or columns.
IntMatrix boundary_matrix(const SimplicialComplex& complex, int s);

/// dim_Q H̃_s(Δ). The void complex has no homology.
std::size_t reduced_homology_dim(const SimplicialComplex& complex, int s);

/// dim_Q H̃_s(Δ_W) for s = -1..|W|-1, indexed by s+1.
std::vector<std::size_t> reduced_homology(const SimplicialComplex& complex, VertexMask within);

}  // namespace monograd
