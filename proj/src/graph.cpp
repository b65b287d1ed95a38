#include "monograd/graph.hpp"

#include <algorithm>

#include "monograd/errors.hpp"

namespace monograd {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (auto [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw DomainError("edge {" + std::to_string(i) + "," + std::to_string(j) + "} outside 1.." + std::to_string(n));
    if (i == j) throw DomainError("loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
      throw DomainError("repeated edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    adj_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    edges_.emplace_back(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool SimpleGraph::has_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) return false;
  return adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

SimpleGraph SimpleGraph::delete_vertex(int v) const {
  if (v < 1 || v > n_) throw DomainError("vertex out of range");
  auto relabel = [v](int u) { return u > v ? u - 1 : u; };
  std::vector<std::pair<int, int>> kept;
  for (auto [i, j] : edges_)
    if (i != v && j != v) kept.emplace_back(relabel(i), relabel(j));
  return SimpleGraph(n_ - 1, std::move(kept));
}

SimpleGraph SimpleGraph::isolate_vertex(int v) const {
  std::vector<std::pair<int, int>> kept;
  for (auto e : edges_)
    if (e.first != v && e.second != v) kept.push_back(e);
  return SimpleGraph(n_, std::move(kept));
}

MonomialIdeal edge_ideal(const SimpleGraph& graph) {
  std::vector<Monomial> gens;
  for (auto [i, j] : graph.edges()) {
    const int vs[] = {i, j};
    gens.push_back(Monomial::squarefree(graph.n(), vs));
  }
  return MonomialIdeal(graph.n(), std::move(gens));
}

MonomialIdeal complementary_edge_ideal(const SimpleGraph& graph) {
  if (graph.n() < 2) throw DomainError("complementary edge ideals need at least two vertices");
  std::vector<Monomial> gens;
  for (auto [i, j] : graph.edges()) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(graph.n()), 1);
    e[static_cast<std::size_t>(i - 1)] = 0;
    e[static_cast<std::size_t>(j - 1)] = 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(graph.n(), std::move(gens));
}

namespace {

// Connectivity of the subgraph induced on vertices with alive[v].
bool connected_on(const SimpleGraph& graph, const std::vector<bool>& alive) {
  int start = 0, total = 0;
  for (int v = 1; v <= graph.n(); ++v)
    if (alive[static_cast<std::size_t>(v)]) {
      ++total;
      if (!start) start = v;
    }
  if (total <= 1) return true;
  std::vector<bool> seen(alive.size(), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 1; u <= graph.n(); ++u) {
      if (!alive[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)] || !graph.has_edge(v, u)) continue;
      seen[static_cast<std::size_t>(u)] = true;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == total;
}

}  // namespace

bool is_connected(const SimpleGraph& graph) {
  std::vector<bool> alive(static_cast<std::size_t>(graph.n()) + 1, true);
  alive[0] = false;
  return connected_on(graph, alive);
}

std::vector<int> peel_order(const SimpleGraph& graph) {
  if (!is_connected(graph)) throw DomainError("peel order needs a connected graph");
  std::vector<bool> alive(static_cast<std::size_t>(graph.n()) + 1, true);
  alive[0] = false;
  std::vector<int> order;
  for (int step = 0; step < graph.n(); ++step) {
    int pick = 0;
    for (int v = graph.n(); v >= 1 && !pick; --v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      alive[static_cast<std::size_t>(v)] = false;
      if (connected_on(graph, alive)) pick = v;
      alive[static_cast<std::size_t>(v)] = true;
    }
    // A connected graph always has a non-cut vertex.
    alive[static_cast<std::size_t>(pick)] = false;
    order.push_back(pick);
  }
  return order;
}

std::vector<SimpleGraph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  if (pairs.size() > 20) throw ResourceError("graph enumeration is limited to n <= 6");
  std::vector<SimpleGraph> out;
  const std::uint32_t total = 1u << pairs.size();
  out.reserve(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask & (1u << k)) edges.push_back(pairs[k]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace monograd
