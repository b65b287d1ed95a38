#pragma once

#include <utility>
#include <vector>

#include "monograd/ideal.hpp"

namespace monograd {

/// Finite simple graph on vertices 1..n. Edges are stored as (i, j) with
/// i < j, sorted; loops and repeated edges are rejected.
class SimpleGraph {
 public:
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;
  std::vector<int> neighbors(int v) const;
  bool is_isolated(int v) const { return neighbors(v).empty(); }

  /// G with vertex v deleted and the remaining vertices relabeled 1..n-1.
  SimpleGraph delete_vertex(int v) const;
  /// Same vertex set, edges at v removed.
  SimpleGraph isolate_vertex(int v) const;

  bool operator==(const SimpleGraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<bool>> adj_;
};

/// (x_i x_j : {i,j} ∈ E). The edgeless graph gives the zero ideal.
MonomialIdeal edge_ideal(const SimpleGraph& graph);
/// (x_[n] / (x_i x_j) : {i,j} ∈ E), generated in degree n-2. Needs n ≥ 2.
MonomialIdeal complementary_edge_ideal(const SimpleGraph& graph);

bool is_connected(const SimpleGraph& graph);

/// Vertices in removal order v_n, v_{n-1}, ..., v_1: each step removes the
/// largest-labeled vertex whose removal keeps the rest connected.
/// Throws DomainError on a disconnected graph.
std::vector<int> peel_order(const SimpleGraph& graph);

/// Every labeled simple graph on n vertices, edge subsets in increasing
/// bitmask order over the lexicographic pair list.
std::vector<SimpleGraph> all_graphs(int n);

}  // namespace monograd
