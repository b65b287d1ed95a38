#pragma once

#include <cstdint>
#include <optional>

#include "monograd/ideal.hpp"

namespace monograd {

/// I = x_v P + J with P a monomial prime, J ⊆ P and v outside supp(P) ∪ supp(J).
struct FShortDecomposition {
  int vertex = 0;
  MonomialIdeal prime;
  MonomialIdeal rest;
};

/// Tries v = n, n-1, ..., 1 and returns the first split with J ⊆ P.
/// Input must be squarefree, generated in degree 2 and supported on all n
/// variables; otherwise DomainError.
std::optional<FShortDecomposition> fshort_decomposition(const MonomialIdeal& ideal);

/// ∂^ℓ(I^k) for I = x_v P + J, evaluated from the decomposition alone:
///   ℓ = 0:          Σ_{r=0..k} x_v^{k-r} P^{k-r} J^r
///   1 ≤ ℓ ≤ k-1:    Σ_{r=0..ℓ} x_v^{k-r} n^r P^{k-ℓ} + Σ_{s=ℓ+1..k} x_v^{k-s} n^ℓ P^{k-s} J^{s-ℓ}
///   k ≤ ℓ ≤ 2k:     m^{2k-ℓ}
/// where n is generated by the variables other than x_v.
MonomialIdeal gradient_power_closed_form(const FShortDecomposition& dec, int n, int k, int l);

/// Ideal with reg I - reg ∂(I) = a, plus the expected pair of regularities.
struct RegGapFamily {
  MonomialIdeal ideal;
  std::int64_t expected_reg = 0;
  std::int64_t expected_reg_gradient = 0;
  /// Construction parameters; zero when unused (a = 0 uses neither).
  int b = 0;
  int c = 0;
};

/// a ≤ -1: (x1x2, x1x3^b, x2x4^b) with b = 2-a, expecting (b+1, 2b-1).
/// a = 0:  (x1x2x3, x2x3x4, x3x4x5, x4x5x6), expecting (3, 3).
/// a ≥ 1:  (x^c, x^{c-1}y, ..., xy^{c-1}, y^b) with c = 2, b = a+1,
///         expecting (b, c-1).
RegGapFamily family_reg_gap(int a);

/// (x_i x_{i+1} ... x_{i+d-1} : i = 1..d+1) in 2d variables; d ≥ 3.
MonomialIdeal family_overlap_run(int d);

}  // namespace monograd
