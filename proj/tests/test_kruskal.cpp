#include <doctest.h>

#include <algorithm>
#include <set>

#include "monograd/errors.hpp"
#include "monograd/kruskal.hpp"

using namespace monograd;

namespace {

using Rep = std::vector<std::pair<std::int64_t, int>>;

// Every sequence a_d > a_{d-1} > ... > a_t >= t >= 1 with Σ C(a_i, i) = a.
void all_reps(std::int64_t a, int i, std::int64_t below, Rep& cur, std::vector<Rep>& out) {
  if (a == 0 && !cur.empty()) out.push_back(cur);
  if (a <= 0 || i < 1) return;
  for (std::int64_t top = i; top < below; ++top) {
    const auto c = binomial(top, i);
    if (c > a) break;
    cur.emplace_back(top, i);
    all_reps(a - c.get_si(), i - 1, top, cur, out);
    cur.pop_back();
  }
}

std::int64_t small_binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Colex initial segment of d-subsets of [ground], sorted with an explicit
// comparator rather than bitmask order.
std::size_t brute_colex_shadow(int a, int d, int ground) {
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == d) {
      sets.push_back(cur);
      return;
    }
    for (int v = next; v <= ground; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(sets.begin(), sets.end(), [](const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> diff;
    std::set_symmetric_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(diff));
    return !diff.empty() && std::binary_search(t.begin(), t.end(), diff.back());
  });
  std::set<std::vector<int>> shadow;
  for (int k = 0; k < a; ++k)
    for (std::size_t drop = 0; drop < sets[static_cast<std::size_t>(k)].size(); ++drop) {
      auto f = sets[static_cast<std::size_t>(k)];
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      shadow.insert(f);
    }
  return shadow.size();
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("binomial expansions") {
  CHECK(macaulay_rep(5, 2).terms == Rep{{3, 2}, {2, 1}});
  CHECK(macaulay_rep(15, 3).terms == Rep{{5, 3}, {3, 2}, {2, 1}});
  CHECK(macaulay_rep(binomial(9, 4), 4).terms == Rep{{9, 4}});
  CHECK(macaulay_rep(15, 3).to_string() == "C(5,3)+C(3,2)+C(2,1)");
  CHECK_THROWS_AS(macaulay_rep(0, 3), DomainError);
  CHECK_THROWS_AS(macaulay_rep(3, 0), DomainError);
}

TEST_CASE("shadow bounds") {
  CHECK(shadow_bound(5, 2) == 4);
  CHECK(shadow_bound(15, 3) == 14);
  CHECK(shadow_bound(binomial(9, 4), 4) == binomial(9, 3));
  CHECK_THROWS_AS(shadow_bound(5, 1), DomainError);
  CHECK(colex_shadow_oracle(5, 2) == 4);
  CHECK(colex_shadow_oracle(20, 3) == 15);
}

TEST_CASE("colex oracle respects its cap") {
  Limits tight;
  tight.colex_enum = 10;
  CHECK_THROWS_AS(colex_shadow_oracle(12, 2, tight), ResourceError);
}

TEST_CASE("property: expansions are unique") {
  for (int d = 1; d <= 5; ++d)
    for (std::int64_t a = 1; a <= 300; ++a) {
      std::vector<Rep> reps;
      Rep cur;
      all_reps(a, d, a + d + 1, cur, reps);
      REQUIRE(reps.size() == 1);
      const auto got = macaulay_rep(a, d);
      CHECK(got.terms == reps.front());
      CHECK(got.well_formed());
      CHECK(got.value() == a);
    }
}

TEST_CASE("property: shadow bound equals colex shadows") {
  for (int d = 2; d <= 4; ++d) {
    const auto top = small_binomial(10, d);
    for (std::int64_t a = 1; a <= top; ++a) {
      const auto bound = shadow_bound(a, d);
      CHECK(bound == colex_shadow_oracle(a, d));
      CHECK(bound == static_cast<unsigned long>(brute_colex_shadow(static_cast<int>(a), d, 10)));
    }
  }
}

TEST_CASE("property: shadow bound is increasing") {
  for (int d = 2; d <= 6; ++d) {
    BigInt prev = 0;
    for (std::int64_t a = 1; a <= 500; ++a) {
      const auto cur = shadow_bound(a, d);
      CHECK(prev <= cur);
      prev = cur;
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_count(6, 3).terms == Rep{{5, 3}, {3, 2}, {2, 1}});
  CHECK(closed_form_count(6, 3).value() == 15);
  CHECK(closed_form_count(7, 3).terms == Rep{{6, 3}, {5, 2}});
  CHECK(closed_form_count(7, 3).value() == 30);
  CHECK(closed_form_count(10, 3).terms == Rep{{9, 3}, {8, 2}, {3, 1}});
  CHECK(closed_form_count(10, 3).value() == 115);
  CHECK(closed_form_shadow(6, 3) == 14);
  CHECK(closed_form_shadow(10, 3) == 45);
  CHECK(closed_form_shadow(8, 4) == 55);
  CHECK_THROWS_AS(closed_form_count(5, 3), DomainError);
  CHECK_THROWS_AS(closed_form_shadow(8, 2), DomainError);
}

TEST_CASE("property: closed forms agree with the greedy expansion") {
  for (int d = 3; d <= 8; ++d)
    for (int n = 2 * d; n <= 20; ++n) {
      const auto a = many_generators_threshold(n, d);
      CHECK(closed_form_count(n, d) == macaulay_rep(a, d));
      CHECK(closed_form_shadow(n, d) == shadow_bound(a, d));
      CHECK(shadow_bound(a, d) >= many_generators_threshold(n, d - 1));
    }
}

TEST_CASE("thresholds") {
  CHECK(many_generators_threshold(6, 3) == 15);
  CHECK(many_generators_threshold(20, 17) == 1107);
  CHECK(many_generators_threshold(20, 16) == 4814);
}

TEST_CASE("the (1107, 17) shadow") {
  const auto rep = macaulay_rep(1107, 17);
  CHECK(rep.to_string() ==
        "C(19,17)+C(18,16)+C(17,15)+C(16,14)+C(15,13)+C(14,12)+C(13,11)+C(12,10)+C(11,9)+C(10,8)+C(9,7)+C(8,6)+"
        "C(7,5)+C(4,4)+C(3,3)");
  const auto bound = shadow_bound(1107, 17);
  CHECK(bound == colex_shadow_oracle(1107, 17));
  CHECK(bound == static_cast<unsigned long>(brute_colex_shadow(1107, 17, 20)));
  CHECK(bound == 4817);
}
