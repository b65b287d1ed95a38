#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "monograd/ideal.hpp"
#include "monograd/limits.hpp"

namespace monograd {

/// An order u_1..u_m of G(I) whose colon ideals (u_1..u_{i-1}) : (u_i) are
/// generated by variables.
struct QuotientOrder {
  std::vector<Monomial> order;
  /// colons[i] lists the 1-based variables generating (u_1..u_{i-1}) : (u_i);
  /// colons[0] is empty.
  std::vector<std::vector<int>> colons;
};

/// Variables generating (prefix) : (u), or nullopt when that colon has a
/// non-linear minimal generator. `prefix` must not contain `u`.
std::optional<std::vector<int>> linear_colon(std::span<const Monomial> prefix, const Monomial& u);

/// True when `order` is a permutation of G(I) with linear colons.
bool is_quotient_order(const MonomialIdeal& ideal, std::span<const Monomial> order);

struct LinearQuotientSearch {
  std::optional<QuotientOrder> order;
  /// False when the node budget ran out before the search was decided.
  bool complete = true;
  std::size_t nodes = 0;
};

/// Backtracking search over admissible prefixes, candidates in canonical
/// generator order, with memoized dead prefix sets. `node_budget == 0`
/// means unbounded. Throws ResourceError above `limits.lq_generators`.
LinearQuotientSearch search_linear_quotients(const MonomialIdeal& ideal, std::size_t node_budget,
                                             const Limits& limits = {});
/// Exhaustive search: a witness order, or nullopt when none exists.
std::optional<QuotientOrder> linear_quotients_order(const MonomialIdeal& ideal, const Limits& limits = {});

/// Witness tree of a vertex splitting I = x_v I_1 + I_2.
struct SplitNode {
  MonomialIdeal ideal;
  /// 0 for a base case (principal, zero or unit).
  int vertex = 0;
  std::unique_ptr<SplitNode> with_vertex;     // I_1
  std::unique_ptr<SplitNode> without_vertex;  // I_2
};

struct VertexSplitResult {
  bool splittable = false;
  /// Present when splittable.
  std::unique_ptr<SplitNode> witness;
};

VertexSplitResult vertex_splitting(const MonomialIdeal& ideal);
bool is_vertex_splittable(const MonomialIdeal& ideal);

/// Equigenerated, and exponent vectors satisfy the basis exchange property.
bool is_polymatroidal(const MonomialIdeal& ideal);

/// I_<j> polymatroidal for α ≤ j ≤ ω, plus the certificate
/// I_<ω+1> = m · I_<ω>. Degree components honor `limits.component_enum`.
bool is_componentwise_polymatroidal(const MonomialIdeal& ideal, const Limits& limits = {});

/// x_i (u / x_max(u)) ∈ I for u ∈ G(I), i < max(u).
bool is_stable(const MonomialIdeal& ideal);
/// x_i (u / x_j) ∈ I for u ∈ G(I), x_j | u, i < j.
bool is_strongly_stable(const MonomialIdeal& ideal);

}  // namespace monograd
