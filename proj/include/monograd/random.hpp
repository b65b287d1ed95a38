#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "monograd/ideal.hpp"

namespace monograd {

/// Seeded generator with a portable bounded sampler, so a seed reproduces
/// the same ideals with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

/// `count` distinct monomials of degree d_min..d_max drawn without
/// replacement, minimalized. Throws DomainError when fewer than `count`
/// candidates exist.
MonomialIdeal random_ideal(int n, int d_min, int d_max, std::size_t count, bool squarefree, std::uint64_t seed);
MonomialIdeal random_ideal(int n, int d_min, int d_max, std::size_t count, bool squarefree, Rng& rng);

/// I_{n,a,d} with random bounds a_i ∈ [0, d] and |a| ≥ d.
MonomialIdeal random_veronese(int n, int d, Rng& rng);

/// Closure of `seeds` under x_i (u / x_j) for x_j | u, i < j.
MonomialIdeal strongly_stable_closure(const std::vector<Monomial>& seeds);
/// Closure of `seeds` under x_i (u / x_max(u)), i < max(u).
MonomialIdeal stable_closure(const std::vector<Monomial>& seeds);

/// Random monomial of total degree d.
Monomial random_monomial(int n, int d, Rng& rng);

/// μ generators with pairwise disjoint supports, degrees in [d_min, d_max].
/// Needs μ ≤ n.
MonomialIdeal random_complete_intersection(int n, std::size_t mu, int d_min, int d_max, Rng& rng);

}  // namespace monograd
