#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "monograd/limits.hpp"

namespace monograd {

using BigInt = mpz_class;

/// C(n, k) for n ≥ 0; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_t, t), a_d > ... > a_t ≥ t ≥ 1.
struct MacaulayRep {
  int d = 0;
  /// (a_i, i) with i descending from d.
  std::vector<std::pair<std::int64_t, int>> terms;

  BigInt value() const;
  /// Strictly decreasing tops, strictly consecutive descending indices from d, a_t ≥ t ≥ 1.
  bool well_formed() const;
  /// "C(5,3)+C(3,2)+C(2,1)".
  std::string to_string() const;

  bool operator==(const MacaulayRep& other) const { return d == other.d && terms == other.terms; }
};

/// Greedy d-th binomial expansion; needs a ≥ 1, d ≥ 1.
MacaulayRep macaulay_rep(const BigInt& a, int d);

/// a^{(d-1)} = Σ C(a_i, i-1) over the terms of macaulay_rep(a, d). Needs d ≥ 2.
BigInt shadow_bound(const BigInt& a, int d);

/// Size of the shadow of the first a d-subsets in colex order, by explicit
/// enumeration over the smallest ground set holding a of them. Throws
/// ResourceError past `limits.colex_enum` subsets or 64 points.
BigInt colex_shadow_oracle(const BigInt& a, int d, const Limits& limits = {});

/// Expansion of C(n, d) - 2d + 1 read off from its three-case closed form.
/// Needs n ≥ 2d and d ≥ 3.
MacaulayRep closed_form_count(int n, int d);
/// C(n, d-1) - 1 for n ≤ 3d-2, C(n, d-1) otherwise. Needs n ≥ 2d and d ≥ 3.
BigInt closed_form_shadow(int n, int d);

/// C(n, d) - 2d + 1. Needs 1 ≤ d ≤ n.
BigInt many_generators_threshold(int n, int d);

}  // namespace monograd
