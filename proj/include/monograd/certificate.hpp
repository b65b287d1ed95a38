#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "monograd/simplicial.hpp"

namespace monograd {

/// A simplicial chain with integer coefficients; faces with zero coefficient
/// are never stored.
using Chain = std::map<VertexMask, std::int64_t>;

/// Σ c_F Σ_{p ∈ F} (-1)^{#{q ∈ F : q < p}} e_{F∖{p}}, same sign as
/// boundary_matrix.
Chain chain_boundary(const Chain& chain);

/// Explicit homology witness for the overlap family of degree d:
/// Δ is the Stanley-Reisner complex of ∂(I), W = {1..d-1} ∪ {d+2..2d} and
/// Γ = Δ_W (kept on the original labels).
struct CycleCertificate {
  int d = 0;
  VertexMask w = 0;
  /// (a) Γ has no face with 2d-3 vertices.
  bool no_top_faces = false;
  /// (b) every W∖{p,q}, p ≤ d-1 < d+2 ≤ q, is a face of Γ.
  bool faces_present = false;
  /// (c) z = Σ (-1)^{p+q} e_{W∖{p,q}} is nonzero with zero boundary.
  bool is_cycle = false;
  std::size_t terms = 0;
  /// dim H̃_{2d-5}(Γ), computed independently of z.
  std::size_t homology = 0;
  /// Witnesses of failure: faces of size 2d-3 found, or W∖{p,q} missing.
  std::vector<VertexMask> offending;

  bool passed() const { return no_top_faces && faces_present && is_cycle; }
};

/// Throws DomainError for d < 3.
CycleCertificate cycle_certificate(int d);

}  // namespace monograd
