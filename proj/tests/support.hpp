#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "monograd/ideal.hpp"
#include "monograd/io.hpp"
#include "monograd/linalg.hpp"
#include "monograd/random.hpp"

namespace testing {

using monograd::Monomial;
using monograd::MonomialIdeal;

inline Monomial mono(int n, const std::string& text) { return monograd::parse_monomial(text, n); }

inline MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> out;
  for (const char* g : gens) out.push_back(mono(n, g));
  return MonomialIdeal(n, std::move(out));
}

/// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rational_rank(const monograd::IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = static_cast<long>(m.at(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Every monomial of degree ≤ top in n variables.
inline std::vector<Monomial> monomials_up_to(int n, int top) {
  std::vector<Monomial> out;
  for (int d = 0; d <= top; ++d)
    for (auto& u : monograd::monomials_of_degree(n, d)) out.push_back(std::move(u));
  return out;
}

/// Small random ideal for property tests.
inline MonomialIdeal sample(monograd::Rng& rng, int n_max, int d_max, int count_max, bool squarefree = false) {
  for (;;) {
    const int n = static_cast<int>(rng.uniform(1, n_max));
    const auto count = static_cast<std::size_t>(rng.uniform(1, count_max));
    try {
      return monograd::random_ideal(n, 1, d_max, count, squarefree, rng);
    } catch (const monograd::Error&) {
      // too few candidate monomials for this n; draw again
    }
  }
}

}  // namespace testing
