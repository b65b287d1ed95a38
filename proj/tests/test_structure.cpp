#include <doctest.h>

#include <algorithm>
#include <map>

#include "monograd/errors.hpp"
#include "monograd/families.hpp"
#include "monograd/gradient.hpp"
#include "monograd/resolution.hpp"
#include "monograd/structure.hpp"
#include "support.hpp"

using namespace monograd;
using testing::ideal;
using testing::mono;

namespace {

// Colon (u_1..u_{k-1}) : (u_k) as a full ideal, then checked for linearity.
bool colon_is_linear(const std::vector<Monomial>& prefix, const Monomial& u) {
  if (prefix.empty()) return true;
  std::vector<Monomial> gens;
  for (const auto& v : prefix) gens.push_back(v.colon(u));
  const MonomialIdeal c(u.n(), std::move(gens));
  return std::all_of(c.gens().begin(), c.gens().end(), [](const Monomial& g) { return g.degree() == 1; });
}

// Tries every permutation of G(I).
bool brute_linear_quotients(const MonomialIdeal& i) {
  std::vector<std::size_t> idx(i.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  do {
    std::vector<Monomial> prefix;
    bool ok = true;
    for (auto k : idx) {
      if (!colon_is_linear(prefix, i.gens()[k])) {
        ok = false;
        break;
      }
      prefix.push_back(i.gens()[k]);
    }
    if (ok) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

bool brute_vertex_splittable(const MonomialIdeal& i) {
  if (i.size() <= 1) return true;
  for (int v = 1; v <= i.n(); ++v) {
    std::vector<Monomial> with, without;
    for (const auto& u : i.gens()) (u.exponent(v) > 0 ? with : without).push_back(u);
    if (with.empty()) continue;
    std::vector<Monomial> quotient;
    for (const auto& u : with) quotient.push_back(u.divide_var(v));
    const MonomialIdeal i1(i.n(), quotient), i2(i.n(), without);
    // G(I) must be the disjoint union, so the quotients stay minimal.
    if (i1.size() != with.size()) continue;
    if (!is_subideal(i2, i1)) continue;
    if (brute_vertex_splittable(i1) && brute_vertex_splittable(i2)) return true;
  }
  return false;
}

// Stability tested on every monomial of I up to degree ω+2.
bool brute_stable(const MonomialIdeal& i, bool strongly) {
  const auto top = static_cast<int>(generator_stats(i).omega) + 2;
  for (const auto& u : testing::monomials_up_to(i.n(), top)) {
    if (!contains(i, u)) continue;
    for (int j = 1; j <= i.n(); ++j) {
      if (u.exponent(j) == 0 || (!strongly && j != u.max_var())) continue;
      for (int k = 1; k < j; ++k)
        if (!contains(i, u.divide_var(j).times_var(k))) return false;
    }
  }
  return true;
}

// Exchange property read directly off exponent vectors.
bool brute_polymatroidal(const MonomialIdeal& i) {
  if (!i.is_equigenerated()) return false;
  const int n = i.n();
  for (const auto& u : i.gens())
    for (const auto& v : i.gens())
      for (int a = 1; a <= n; ++a) {
        if (u.exponent(a) <= v.exponent(a)) continue;
        bool found = false;
        for (int b = 1; b <= n && !found; ++b)
          if (u.exponent(b) < v.exponent(b)) {
            const auto w = u.divide_var(a).times_var(b);
            found = std::find(i.gens().begin(), i.gens().end(), w) != i.gens().end();
          }
        if (!found) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("linear quotients examples") {
  const auto i = ideal(4, {"x1*x2", "x1*x3^3", "x2*x4^3"});
  const std::vector<Monomial> as_written = {mono(4, "x1*x2"), mono(4, "x1*x3^3"), mono(4, "x2*x4^3")};
  CHECK(is_quotient_order(i, as_written));
  CHECK(linear_colon(std::span(as_written).first(1), as_written[1]) == std::vector<int>{2});
  CHECK(linear_colon(std::span(as_written).first(2), as_written[2]) == std::vector<int>{1});
  const auto run = family_overlap_run(4);
  const auto& g = run.gens();
  // The run as written: u_i = x_i..x_{i+d-1}, colon (x_{i-1}).
  std::vector<Monomial> written;
  for (int s = 1; s <= 5; ++s) {
    const int vs[] = {s, s + 1, s + 2, s + 3};
    written.push_back(Monomial::squarefree(8, vs));
  }
  CHECK(std::is_permutation(written.begin(), written.end(), g.begin(), g.end()));
  CHECK(is_quotient_order(run, written));
  for (std::size_t k = 1; k < written.size(); ++k)
    CHECK(linear_colon(std::span(written).first(k), written[k]) == std::vector<int>{static_cast<int>(k)});
  CHECK_FALSE(linear_quotients_order(ideal(4, {"x1*x2", "x3*x4"})).has_value());
  const auto found = linear_quotients_order(i);
  REQUIRE(found.has_value());
  CHECK(is_quotient_order(i, found->order));
  CHECK(found->colons.front().empty());
}

TEST_CASE("linear quotients search limits") {
  Limits tight;
  tight.lq_generators = 2;
  CHECK_THROWS_AS(linear_quotients_order(ideal(3, {"x1", "x2", "x3"}), tight), ResourceError);
  const auto budgeted = search_linear_quotients(ideal(4, {"x1*x2", "x3*x4"}), 1);
  CHECK_FALSE(budgeted.complete);
}

TEST_CASE("property: linear quotients search matches permutation brute force") {
  Rng rng(53);
  int yes = 0, no = 0;
  for (int t = 0; t < 250; ++t) {
    const auto i = testing::sample(rng, 4, 3, 5);
    const bool expect = brute_linear_quotients(i);
    const auto got = linear_quotients_order(i);
    CHECK(got.has_value() == expect);
    if (got) CHECK(is_quotient_order(i, got->order));
    (expect ? yes : no)++;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("vertex splittable examples") {
  for (int n = 1; n <= 4; ++n) CHECK(is_vertex_splittable(MonomialIdeal::maximal(n)));
  CHECK(is_vertex_splittable(ideal(3, {"x1*x2", "x1*x3", "x2*x3"})));
  CHECK_FALSE(is_vertex_splittable(ideal(4, {"x1*x2", "x3*x4"})));
  CHECK(is_vertex_splittable(MonomialIdeal::zero(2)));
  CHECK(is_vertex_splittable(MonomialIdeal::unit(2)));
  CHECK(is_vertex_splittable(ideal(2, {"x1^3*x2"})));
  const auto w = vertex_splitting(ideal(3, {"x1*x2", "x1*x3", "x2*x3"}));
  REQUIRE(w.witness);
  CHECK(w.witness->vertex != 0);
}

TEST_CASE("property: vertex splitting matches the direct recursion") {
  Rng rng(59);
  int yes = 0, no = 0;
  for (int t = 0; t < 250; ++t) {
    const auto i = testing::sample(rng, 4, 3, 5);
    const bool expect = brute_vertex_splittable(i);
    CHECK(is_vertex_splittable(i) == expect);
    if (expect) CHECK(linear_quotients_order(i).has_value());
    (expect ? yes : no)++;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("polymatroidal examples") {
  for (int d = 1; d <= 3; ++d) CHECK(is_polymatroidal(power(MonomialIdeal::maximal(3), d)));
  const int a[] = {2, 1, 2};
  CHECK(is_polymatroidal(veronese_type(3, a, 3).ideal));
  CHECK_FALSE(is_polymatroidal(ideal(4, {"x1*x2", "x3*x4"})));
  CHECK_FALSE(is_polymatroidal(ideal(2, {"x1", "x2^2"})));
}

TEST_CASE("componentwise polymatroidal examples") {
  CHECK(is_componentwise_polymatroidal(ideal(3, {"x1*x2", "x1*x3", "x2*x3"})));
  CHECK(is_componentwise_polymatroidal(ideal(3, {"x1", "x2*x3"})));
  CHECK_FALSE(is_componentwise_polymatroidal(ideal(4, {"x1*x2", "x3*x4"})));
  Limits tight;
  tight.component_enum = 2;
  CHECK_THROWS_AS(is_componentwise_polymatroidal(ideal(3, {"x1", "x2*x3"}), tight), ResourceError);
}

TEST_CASE("property: polymatroidal check matches the exchange oracle") {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const auto i = t % 2 ? random_veronese(static_cast<int>(rng.uniform(1, 4)), static_cast<int>(rng.uniform(1, 3)), rng)
                         : testing::sample(rng, 4, 3, 6);
    if (i.is_zero()) continue;
    CHECK(is_polymatroidal(i) == brute_polymatroidal(i));
  }
}

TEST_CASE("stable and strongly stable examples") {
  CHECK(is_strongly_stable(ideal(2, {"x1^2", "x1*x2"})));
  CHECK_FALSE(is_stable(ideal(2, {"x2"})));
  CHECK(is_strongly_stable(power(MonomialIdeal::maximal(3), 3)));
}

TEST_CASE("stable but not strongly stable witness") {
  // x1 * (x2x3 / x2) = x1x3 is missing, but stability only moves x3.
  const auto w = ideal(3, {"x1^2", "x1*x2", "x2^2", "x2*x3"});
  CHECK(is_stable(w));
  CHECK_FALSE(is_strongly_stable(w));
  CHECK(brute_stable(w, false));
  CHECK_FALSE(brute_stable(w, true));
}

TEST_CASE("property: stability checks match the monomial sweep") {
  Rng rng(67);
  int stable_only = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<Monomial> seeds;
    const int n = static_cast<int>(rng.uniform(1, 4));
    for (int k = 0; k < 2; ++k) seeds.push_back(random_monomial(n, static_cast<int>(rng.uniform(1, 3)), rng));
    for (const auto& i : {testing::sample(rng, 3, 3, 4), stable_closure(seeds), strongly_stable_closure(seeds)}) {
      CHECK(is_stable(i) == brute_stable(i, false));
      CHECK(is_strongly_stable(i) == brute_stable(i, true));
      if (is_strongly_stable(i)) CHECK(is_stable(i));
      if (is_stable(i) && !is_strongly_stable(i)) ++stable_only;
    }
  }
  CHECK(stable_only > 0);
}
