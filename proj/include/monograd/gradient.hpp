#pragma once

#include "monograd/ideal.hpp"

namespace monograd {

/// The gradient ideal ∂(I) = (u/x_i : u ∈ G(I), x_i | u), computed
/// combinatorially (characteristic zero). ∂(0) = 0 and ∂(S) = S.
MonomialIdeal gradient(const MonomialIdeal& ideal);

/// Σ_i (I : x_i). Agrees with gradient() on every input; kept as an
/// independent cross-check path.
MonomialIdeal gradient_via_colon(const MonomialIdeal& ideal);

/// ∂^ℓ(I), re-minimalizing between steps. ∂^0(I) = I.
MonomialIdeal iterated_gradient(const MonomialIdeal& ideal, int order);

}  // namespace monograd
