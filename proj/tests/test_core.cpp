#include <doctest.h>

#include "monograd/errors.hpp"
#include "monograd/gradient.hpp"
#include "monograd/ideal.hpp"
#include "support.hpp"

using namespace monograd;
using testing::ideal;
using testing::mono;

TEST_CASE("monomial arithmetic and printing") {
  const Monomial u{2, 0, 1};
  CHECK(u.degree() == 3);
  CHECK(u.support() == std::vector<int>{1, 3});
  CHECK(u.max_var() == 3);
  CHECK(u.to_string() == "x1^2*x3");
  CHECK(Monomial::unit(3).to_string() == "1");
  CHECK(Monomial::unit(3).support().empty());
  CHECK(u.divides(Monomial{2, 1, 1}));
  CHECK_FALSE(u.divides(Monomial{1, 1, 1}));
  CHECK(u.colon(Monomial{1, 1, 0}) == Monomial{1, 0, 1});
  CHECK(u.lcm(Monomial{0, 1, 2}) == Monomial{2, 1, 2});
  CHECK(u.gcd(Monomial{1, 1, 2}) == Monomial{1, 0, 1});
  CHECK_THROWS_AS(u.divide_var(2), DomainError);
  CHECK_THROWS_AS(Monomial({-1, 0}), DomainError);
  CHECK_THROWS_AS(u * Monomial({1, 0}), DimensionMismatch);
}

TEST_CASE("exponent overflow is reported") {
  const Monomial big{2147483647};
  CHECK_THROWS_AS(big * Monomial{1}, OverflowError);
  CHECK_THROWS_AS(big.times_var(1), OverflowError);
}

TEST_CASE("canonical order: degree, then lexicographically descending") {
  const auto i = ideal(3, {"x3", "x1*x2", "x1", "x2^2"});
  REQUIRE(i.size() == 3);
  CHECK(i.gens()[0] == mono(3, "x1"));
  CHECK(i.gens()[1] == mono(3, "x3"));
  CHECK(i.gens()[2] == mono(3, "x2^2"));
}

TEST_CASE("minimalize") {
  CHECK(ideal(2, {"x1", "x1*x2"}) == ideal(2, {"x1"}));
  CHECK(ideal(4, {"x1*x2", "x1*x3^2", "x2*x4^2", "x1*x2*x3"}) == ideal(4, {"x1*x2", "x1*x3^2", "x2*x4^2"}));
  CHECK(minimalize(3, {}).is_zero());
  CHECK_THROWS_AS(MonomialIdeal(2, {Monomial{1, 0, 0}}), DimensionMismatch);
}

TEST_CASE("membership and equality") {
  CHECK(contains(ideal(3, {"x1*x2"}), mono(3, "x1*x2*x3")));
  CHECK_FALSE(contains(ideal(3, {"x1*x2"}), mono(3, "x1*x3")));
  CHECK_FALSE(contains(MonomialIdeal::zero(3), mono(3, "x1")));
  CHECK(contains(MonomialIdeal::unit(3), mono(3, "1")));
  CHECK(ideal_equals(ideal(2, {"x1", "x1*x2"}), ideal(2, {"x1"})));
  CHECK_FALSE(ideal_equals(ideal(3, {"x1*x2", "x2*x3"}), ideal(3, {"x1*x2"})));
  CHECK_FALSE(ideal_equals(MonomialIdeal::zero(2), MonomialIdeal::unit(2)));
  CHECK_THROWS_AS(contains(ideal(2, {"x1"}), mono(3, "x1")), DimensionMismatch);
}

TEST_CASE("sum, product, power") {
  CHECK(product(ideal(2, {"x1"}), ideal(2, {"x2"})) == ideal(2, {"x1*x2"}));
  CHECK(power(MonomialIdeal::maximal(2), 2) == ideal(2, {"x1^2", "x1*x2", "x2^2"}));
  const auto i = ideal(3, {"x1*x2", "x2*x3"});
  CHECK(product(i, i) == ideal(3, {"x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"}));
  CHECK(power(i, 0).is_unit());
  CHECK(sum(i, ideal(3, {"x2"})) == ideal(3, {"x2"}));
}

TEST_CASE("colon by a variable") {
  CHECK(colon_by_variable(ideal(3, {"x1*x2", "x2*x3"}), 2) == ideal(3, {"x1", "x3"}));
  CHECK(colon_by_variable(ideal(1, {"x1^2"}), 1) == ideal(1, {"x1"}));
  CHECK(colon_by_variable(ideal(3, {"x1*x2", "x3"}), 1) == ideal(3, {"x2", "x3"}));
  CHECK_THROWS_AS(colon_by_variable(ideal(2, {"x1"}), 3), DomainError);
  CHECK_THROWS_AS(colon_by_variable(ideal(2, {"x1"}), 0), DomainError);
}

TEST_CASE("generator statistics") {
  const auto s = generator_stats(ideal(3, {"x1*x2", "x1*x3^2"}));
  CHECK(s.alpha == 2);
  CHECK(s.omega == 3);
  CHECK(s.mu == 2);
  CHECK(s.support == std::vector<int>{1, 2, 3});
  const auto u = generator_stats(MonomialIdeal::unit(3));
  CHECK(u.alpha == 0);
  CHECK(u.omega == 0);
  CHECK(u.mu == 1);
  CHECK(u.support.empty());
  const auto f = generator_stats(ideal(4, {"x1*x2", "x1*x3^3", "x2*x4^3"}));
  CHECK(f.alpha == 2);
  CHECK(f.omega == 4);
  CHECK(f.mu == 3);
  CHECK_THROWS_AS(generator_stats(MonomialIdeal::zero(2)), DomainError);
}

TEST_CASE("degree components") {
  CHECK(degree_component(ideal(2, {"x1^2", "x2"}), 1) == ideal(2, {"x2"}));
  CHECK(degree_component(ideal(3, {"x1*x2"}), 3) == ideal(3, {"x1^2*x2", "x1*x2^2", "x1*x2*x3"}));
  CHECK(degree_component(ideal(1, {"x1"}), 0).is_zero());
  Limits tight;
  tight.component_enum = 10;
  CHECK_THROWS_AS(degree_component(ideal(4, {"x1"}), 3, tight), ResourceError);
}

TEST_CASE("Veronese-type ideals") {
  const int a11[] = {1, 1};
  CHECK(veronese_type(2, a11, 1).ideal == ideal(2, {"x1", "x2"}));
  const int a21[] = {2, 1};
  CHECK(veronese_type(2, a21, 2).ideal == ideal(2, {"x1^2", "x1*x2"}));
  CHECK(gradient(ideal(2, {"x1^2*x2"})) == veronese_type(2, a21, 2).ideal);
  const auto over = veronese_type(2, a11, 3);
  CHECK(over.exceeds_bound);
  CHECK(over.ideal.is_zero());
}

TEST_CASE("complete intersections") {
  CHECK(is_complete_intersection(ideal(4, {"x1*x2", "x3*x4"})));
  CHECK_FALSE(is_complete_intersection(ideal(3, {"x1*x2", "x2*x3"})));
  CHECK(is_complete_intersection(ideal(4, {"x1", "x2", "x3^3", "x4^3"})));
  CHECK_THROWS_AS(is_complete_intersection(MonomialIdeal::zero(2)), DomainError);
  CHECK_THROWS_AS(is_complete_intersection(MonomialIdeal::unit(2)), DomainError);
}

TEST_CASE("support compression") {
  std::vector<int> kept;
  const auto c = compress_support(ideal(5, {"x2*x4", "x4^2"}), &kept);
  CHECK(kept == std::vector<int>{2, 4});
  CHECK(c == ideal(2, {"x1*x2", "x2^2"}));
}

TEST_CASE("gradient examples") {
  const auto i = ideal(4, {"x1*x2", "x1*x3^2", "x2*x4^2"});
  CHECK(gradient(i) == ideal(4, {"x1", "x2", "x3^2", "x4^2"}));
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto m = MonomialIdeal::maximal(n);
      CHECK(gradient(power(m, k)) == power(m, k - 1));
    }
  const auto run = ideal(6, {"x1*x2*x3", "x2*x3*x4", "x3*x4*x5", "x4*x5*x6"});
  CHECK(gradient(run) ==
        ideal(6, {"x1*x2", "x1*x3", "x2*x3", "x2*x4", "x3*x4", "x3*x5", "x4*x5", "x4*x6", "x5*x6"}));
  CHECK(gradient(run).size() == 9);
  CHECK(gradient(ideal(2, {"x1"})).is_unit());
  CHECK(gradient_via_colon(ideal(2, {"x1"})).is_unit());
  CHECK(gradient(MonomialIdeal::zero(3)).is_zero());
  CHECK(gradient(MonomialIdeal::unit(3)).is_unit());
}

TEST_CASE("iterated gradient") {
  const auto i = ideal(3, {"x1*x2*x3"});
  CHECK(iterated_gradient(i, 0) == i);
  CHECK(iterated_gradient(i, 2) == MonomialIdeal::maximal(3));
  CHECK(iterated_gradient(ideal(6, {"x1*x2*x3", "x2*x3*x4", "x3*x4*x5", "x4*x5*x6"}), 3).is_unit());
  CHECK_THROWS_AS(iterated_gradient(i, -1), DomainError);
}

// ------------------------------------------------------------ properties

namespace {

// ∂ straight from the definition, without going through MonomialIdeal
// helpers other than minimalization.
MonomialIdeal gradient_oracle(const MonomialIdeal& i) {
  std::vector<Monomial> out;
  for (const auto& u : i.gens()) {
    for (int v = 1; v <= i.n(); ++v) {
      if (u.exponent(v) == 0) continue;
      std::vector<std::int32_t> e(u.exponents().begin(), u.exponents().end());
      --e[static_cast<std::size_t>(v - 1)];
      out.emplace_back(std::move(e));
    }
  }
  if (i.is_unit()) return i;
  return MonomialIdeal(i.n(), std::move(out));
}

bool pairwise_minimal(const MonomialIdeal& i) {
  for (const auto& a : i.gens())
    for (const auto& b : i.gens())
      if (!(a == b) && a.divides(b)) return false;
  return true;
}

}  // namespace

TEST_CASE("property: gradient agrees with the colon sum and the definition") {
  Rng rng(20240501);
  for (int s = 0; s < 500; ++s) {
    const auto i = testing::sample(rng, 6, 5, 6);
    CHECK(gradient(i) == gradient_via_colon(i));
    CHECK(gradient(i) == gradient_oracle(i));
  }
}

TEST_CASE("property: minimal generators and idempotent minimalization") {
  Rng rng(7);
  for (int s = 0; s < 200; ++s) {
    const auto i = testing::sample(rng, 5, 4, 8);
    CHECK(pairwise_minimal(i));
    CHECK(minimalize(i.n(), i.gens()) == i);
    CHECK(generator_stats(i).alpha <= generator_stats(i).omega);
  }
}

TEST_CASE("property: ideal arithmetic laws") {
  Rng rng(11);
  for (int s = 0; s < 150; ++s) {
    const int n = static_cast<int>(rng.uniform(1, 5));
    auto draw = [&] { return random_ideal(n, 1, 3, static_cast<std::size_t>(rng.uniform(1, 3)), false, rng); };
    const auto a = draw(), b = draw(), c = draw();
    CHECK(sum(a, b) == sum(b, a));
    CHECK(product(a, b) == product(b, a));
    CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
    CHECK(product(a, sum(b, c)) == sum(product(a, b), product(a, c)));
    for (const auto& u : a.gens()) CHECK(contains(sum(a, b), u));
    for (int v = 1; v <= n; ++v) {
      const auto q = colon_by_variable(a, v);
      for (const auto& u : q.gens()) CHECK(contains(a, u.times_var(v)));
    }
  }
}

TEST_CASE("property: degree components stabilize past ω") {
  Rng rng(13);
  for (int s = 0; s < 100; ++s) {
    const auto i = testing::sample(rng, 4, 3, 4);
    const auto omega = static_cast<int>(generator_stats(i).omega);
    for (int j = omega; j <= omega + 1; ++j)
      CHECK(degree_component(i, j + 1) == product(MonomialIdeal::maximal(i.n()), degree_component(i, j)));
  }
}

TEST_CASE("property: gradient laws") {
  Rng rng(17);
  for (int s = 0; s < 200; ++s) {
    const int n = static_cast<int>(rng.uniform(1, 5));
    auto draw = [&] { return random_ideal(n, 1, 3, static_cast<std::size_t>(rng.uniform(1, 3)), false, rng); };
    const auto i = draw(), j = draw();
    // Leibniz rule.
    CHECK(gradient(product(i, j)) == sum(product(gradient(i), j), product(i, gradient(j))));
    // Monotonicity on a nested pair.
    const auto big = sum(i, j);
    CHECK(is_subideal(gradient(i), gradient(big)));
    // Degree drop.
    if (generator_stats(i).alpha >= 1) CHECK(generator_stats(gradient(i)).alpha == generator_stats(i).alpha - 1);
    // ∂(m^k I) = m^k ∂(I).
    for (int k = 1; k <= 3; ++k) {
      const auto mk = power(MonomialIdeal::maximal(n), k);
      CHECK(gradient(product(mk, i)) == product(mk, gradient(i)));
    }
    // ∂(I)_<j> = ∂(I_<j+1>).
    const auto omega = static_cast<int>(generator_stats(i).omega);
    for (int d = 0; d <= omega + 2; ++d)
      CHECK(degree_component(gradient(i), d) == gradient(degree_component(i, d + 1)));
  }
}

TEST_CASE("property: gradient of a product with a fresh variable") {
  Rng rng(19);
  for (int s = 0; s < 100; ++s) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    const int fresh = static_cast<int>(rng.uniform(1, n));
    std::vector<Monomial> gens;
    const auto count = rng.uniform(1, 3);
    for (std::int64_t k = 0; k < count; ++k) {
      auto u = random_monomial(n, static_cast<int>(rng.uniform(1, 3)), rng);
      while (u.exponent(fresh) > 0) u = u.divide_var(fresh).times_var(fresh == 1 ? 2 : 1);
      gens.push_back(u);
    }
    const MonomialIdeal i(n, gens);
    const auto x = Monomial::variable(n, fresh);
    for (int l = 1; l <= 3; ++l)
      CHECK(iterated_gradient(scale(i, x), l) == sum(scale(iterated_gradient(i, l), x), iterated_gradient(i, l - 1)));
  }
}
