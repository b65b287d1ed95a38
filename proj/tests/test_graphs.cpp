#include <doctest.h>

#include <algorithm>

#include "monograd/errors.hpp"
#include "monograd/families.hpp"
#include "monograd/gradient.hpp"
#include "monograd/graph.hpp"
#include "monograd/resolution.hpp"
#include "monograd/structure.hpp"
#include "support.hpp"

using namespace monograd;
using testing::ideal;

namespace {

SimpleGraph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, e);
}

SimpleGraph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return SimpleGraph(n, e);
}

// Chordality by repeatedly removing a simplicial vertex.
bool is_chordal(const SimpleGraph& g) {
  std::vector<bool> gone(static_cast<std::size_t>(g.n() + 1), false);
  for (int left = g.n(); left > 0; --left) {
    int pick = 0;
    for (int v = 1; v <= g.n() && !pick; ++v) {
      if (gone[static_cast<std::size_t>(v)]) continue;
      std::vector<int> nb;
      for (int u : g.neighbors(v))
        if (!gone[static_cast<std::size_t>(u)]) nb.push_back(u);
      bool clique = true;
      for (std::size_t a = 0; a < nb.size() && clique; ++a)
        for (std::size_t b = a + 1; b < nb.size() && clique; ++b) clique = g.has_edge(nb[a], nb[b]);
      if (clique) pick = v;
    }
    if (!pick) return false;
    gone[static_cast<std::size_t>(pick)] = true;
  }
  return true;
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (!g.has_edge(i, j)) e.emplace_back(i, j);
  return SimpleGraph(g.n(), e);
}

bool fully_supported(const SimpleGraph& g) {
  for (int v = 1; v <= g.n(); ++v)
    if (g.is_isolated(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("graph construction") {
  const SimpleGraph g(3, {{2, 1}, {3, 2}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(g.has_edge(2, 1));
  CHECK(g.neighbors(2) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 2}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 4}}), DomainError);
  CHECK(g.delete_vertex(1) == SimpleGraph(2, {{1, 2}}));
  CHECK(g.isolate_vertex(2) == SimpleGraph(3, {}));
}

TEST_CASE("edge ideals") {
  CHECK(edge_ideal(path(3)) == ideal(3, {"x1*x2", "x2*x3"}));
  CHECK(complementary_edge_ideal(path(3)) == ideal(3, {"x3", "x1"}));
  const SimpleGraph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(complementary_edge_ideal(c4) == ideal(4, {"x3*x4", "x1*x4", "x1*x2", "x2*x3"}));
  CHECK(edge_ideal(SimpleGraph(3, {})).is_zero());
  CHECK_THROWS_AS(complementary_edge_ideal(SimpleGraph(1, {})), DomainError);
}

TEST_CASE("connectivity and peel order") {
  CHECK(is_connected(path(4)));
  CHECK(peel_order(path(4)) == std::vector<int>{4, 3, 2, 1});
  CHECK_FALSE(is_connected(SimpleGraph(4, {{1, 2}, {3, 4}})));
  CHECK_THROWS_AS(peel_order(SimpleGraph(4, {{1, 2}, {3, 4}})), DomainError);
  CHECK(peel_order(complete(4)) == std::vector<int>{4, 3, 2, 1});
  // Star centred at 1: the centre is a cut vertex until only it and one leaf remain.
  const auto star = peel_order(SimpleGraph(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(star == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("property: every peel prefix leaves a connected graph") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      if (!is_connected(g)) continue;
      auto h = g;
      std::vector<int> labels;
      for (int v = 1; v <= n; ++v) labels.push_back(v);
      for (int v : peel_order(g)) {
        const auto pos = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), v) - labels.begin());
        REQUIRE(pos < labels.size());
        h = h.delete_vertex(static_cast<int>(pos) + 1);
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pos));
        CHECK(is_connected(h));
      }
    }
}

TEST_CASE("graph enumeration") {
  CHECK(all_graphs(3).size() == 8);
  CHECK(all_graphs(4).size() == 64);
  CHECK(all_graphs(5).size() == 1024);
  std::size_t connected = 0;
  for (const auto& g : all_graphs(4)) connected += is_connected(g);
  CHECK(connected == 38);
  connected = 0;
  for (const auto& g : all_graphs(5)) connected += is_connected(g);
  CHECK(connected == 728);
}

TEST_CASE("decompositions") {
  const auto p = fshort_decomposition(ideal(3, {"x1*x2", "x2*x3"}));
  REQUIRE(p);
  CHECK(p->vertex == 3);
  CHECK(p->prime == ideal(3, {"x2"}));
  CHECK(p->rest == ideal(3, {"x1*x2"}));
  const auto t = fshort_decomposition(edge_ideal(complete(3)));
  REQUIRE(t);
  CHECK(t->vertex == 3);
  CHECK(t->prime == ideal(3, {"x1", "x2"}));
  CHECK(t->rest == ideal(3, {"x1*x2"}));
  CHECK_FALSE(fshort_decomposition(ideal(4, {"x1*x2", "x3*x4"})));
  CHECK_THROWS_AS(fshort_decomposition(ideal(3, {"x1^2", "x2*x3"})), DomainError);
  CHECK_THROWS_AS(fshort_decomposition(ideal(4, {"x1*x2", "x2*x3"})), DomainError);
}

TEST_CASE("closed form for gradients of powers") {
  const auto p = *fshort_decomposition(ideal(3, {"x1*x2", "x2*x3"}));
  CHECK(gradient_power_closed_form(p, 3, 1, 1) == MonomialIdeal::maximal(3));
  CHECK(gradient_power_closed_form(p, 3, 2, 4).is_unit());
  const auto tri = edge_ideal(complete(3));
  const auto t = *fshort_decomposition(tri);
  CHECK(gradient_power_closed_form(t, 3, 2, 1) == iterated_gradient(power(tri, 2), 1));
}

TEST_CASE("property: closed form against direct gradients, screened by chordal complements") {
  int screened = 0;
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) {
      if (!fully_supported(g)) continue;
      const auto i = edge_ideal(g);
      const bool linear = has_linear_resolution(i, Engine::Hochster);
      CHECK(linear == is_chordal(complement(g)));
      const auto dec = fshort_decomposition(i);
      if (linear) CHECK(dec.has_value());
      if (!linear || !dec) continue;
      ++screened;
      const auto& pr = dec->prime;
      const auto& j = dec->rest;
      CHECK(sum(scale(pr, Monomial::variable(n, dec->vertex)), j) == i);
      const auto dj = gradient(j);
      CHECK(sum(sum(product(pr, pr), j), product(pr, dj)) == product(pr, sum(pr, dj)));
      std::vector<int> rest_vars;
      for (int v = 1; v <= n; ++v)
        if (v != dec->vertex) rest_vars.push_back(v);
      CHECK(sum(pr, dj) == MonomialIdeal::prime(n, rest_vars));
      for (int k = 1; k <= 2; ++k)
        for (int l = 0; l <= 2 * k; ++l)
          CHECK(gradient_power_closed_form(*dec, n, k, l) == iterated_gradient(power(i, k), l));
    }
  CHECK(screened > 0);
}

TEST_CASE("property: complementary edge ideals of connected graphs") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& g : all_graphs(n)) {
      if (!is_connected(g)) continue;
      auto cur = complementary_edge_ideal(g);
      for (int l = 0; l <= n - 2; ++l) {
        CHECK(is_vertex_splittable(cur));
        CHECK(regularity(cur, Engine::Koszul) == n - 2 - l);
        cur = gradient(cur);
      }
    }
}

TEST_CASE("property: an isolated vertex factors out of the complementary edge ideal") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : all_graphs(n))
      for (int v = 1; v <= n; ++v) {
        if (!g.is_isolated(v) || g.edges().empty()) continue;
        const auto smaller = complementary_edge_ideal(g.delete_vertex(v));
        std::vector<Monomial> lifted;
        for (const auto& u : smaller.gens()) {
          std::vector<std::int32_t> e(u.exponents().begin(), u.exponents().end());
          e.insert(e.begin() + (v - 1), 1);
          lifted.emplace_back(std::move(e));
        }
        CHECK(complementary_edge_ideal(g) == MonomialIdeal(n, lifted));
      }
}

TEST_CASE("regularity-gap family") {
  const auto m1 = family_reg_gap(-1);
  CHECK(m1.b == 3);
  CHECK(m1.expected_reg == 4);
  CHECK(m1.expected_reg_gradient == 5);
  CHECK(m1.ideal == ideal(4, {"x1*x2", "x1*x3^3", "x2*x4^3"}));
  const auto z = family_reg_gap(0);
  CHECK(z.expected_reg == 3);
  CHECK(z.expected_reg_gradient == 3);
  CHECK(z.ideal == family_overlap_run(3));
  const auto p2 = family_reg_gap(2);
  CHECK(p2.c == 2);
  CHECK(p2.b == 3);
  CHECK(p2.expected_reg == 3);
  CHECK(p2.expected_reg_gradient == 1);
  CHECK(gradient(p2.ideal) == MonomialIdeal::maximal(2));
  for (int a = -4; a <= 4; ++a) {
    const auto f = family_reg_gap(a);
    CHECK(f.expected_reg - f.expected_reg_gradient == a);
    CHECK(regularity(f.ideal, Engine::Koszul) == f.expected_reg);
    CHECK(regularity(gradient(f.ideal), Engine::Koszul) == f.expected_reg_gradient);
  }
}

TEST_CASE("overlap runs") {
  CHECK(family_overlap_run(4).size() == 5);
  CHECK(family_overlap_run(4).n() == 8);
  CHECK(family_overlap_run(5).size() == 6);
  CHECK(family_overlap_run(5).n() == 10);
  CHECK_THROWS_AS(family_overlap_run(2), DomainError);
  for (int d = 3; d <= 4; ++d) {
    CHECK(regularity(family_overlap_run(d), Engine::Koszul) == d);
    CHECK(regularity(gradient(family_overlap_run(d)), Engine::Koszul) == 2 * d - 3);
  }
}
