"""Monomial ideals, gradient ideals and their Betti numbers."""

from ._monograd import (
    betti_table,
    colex_shadow_oracle,
    colon,
    complementary_edge_ideal,
    degree_component,
    DimensionMismatch,
    DomainError,
    edge_ideal,
    Error,
    ExponentOverflowError,
    family_overlap_run,
    family_reg_gap,
    gradient,
    gradient_via_colon,
    has_differential_linear_resolution,
    has_linear_resolution,
    Ideal,
    is_componentwise_polymatroidal,
    is_polymatroidal,
    is_stable,
    is_strongly_stable,
    is_vertex_splittable,
    iterated_gradient,
    linear_quotients_order,
    macaulay_rep,
    ParseError,
    regularity,
    ResourceError,
    shadow_bound,
    stats,
    theorem_ids,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
