#include "monograd/families.hpp"

#include <string>
#include <vector>

#include "monograd/errors.hpp"

namespace monograd {

std::optional<FShortDecomposition> fshort_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || !ideal.is_squarefree() || !ideal.is_equigenerated() || ideal.gens().front().degree() != 2)
    throw DomainError("decomposition needs a squarefree ideal generated in degree 2");
  const int n = ideal.n();
  if (static_cast<int>(ideal_support(ideal).size()) != n)
    throw DomainError("decomposition needs every variable in the support");
  for (int v = n; v >= 1; --v) {
    std::vector<int> nbrs;
    std::vector<Monomial> rest;
    for (const auto& g : ideal.gens()) {
      if (g.exponent(v) > 0) {
        nbrs.push_back(g.divide_var(v).support().front());
      } else {
        rest.push_back(g);
      }
    }
    MonomialIdeal prime = MonomialIdeal::prime(n, nbrs);
    MonomialIdeal j(n, std::move(rest));
    if (is_subideal(j, prime)) return FShortDecomposition{v, std::move(prime), std::move(j)};
  }
  return std::nullopt;
}

MonomialIdeal gradient_power_closed_form(const FShortDecomposition& dec, int n, int k, int l) {
  if (k < 1) throw DomainError("closed form needs k >= 1");
  if (l < 0 || l > 2 * k) throw DomainError("order " + std::to_string(l) + " outside 0.." + std::to_string(2 * k));
  if (dec.prime.n() != n || dec.rest.n() != n || dec.vertex < 1 || dec.vertex > n)
    throw DimensionMismatch("decomposition does not live in " + std::to_string(n) + " variables");
  const auto m = MonomialIdeal::maximal(n);
  if (l >= k) return power(m, 2 * k - l);

  std::vector<int> others;
  for (int i = 1; i <= n; ++i)
    if (i != dec.vertex) others.push_back(i);
  const auto nn = MonomialIdeal::prime(n, others);
  const auto xv = Monomial::variable(n, dec.vertex);
  auto xv_pow = [&](int e) {
    Monomial u = Monomial::unit(n);
    for (int t = 0; t < e; ++t) u = u * xv;
    return u;
  };

  MonomialIdeal out = MonomialIdeal::zero(n);
  if (l == 0) {
    for (int r = 0; r <= k; ++r)
      out = sum(out, scale(product(power(dec.prime, k - r), power(dec.rest, r)), xv_pow(k - r)));
    return out;
  }
  const auto p_tail = power(dec.prime, k - l);
  for (int r = 0; r <= l; ++r) out = sum(out, scale(product(power(nn, r), p_tail), xv_pow(k - r)));
  const auto n_l = power(nn, l);
  for (int s = l + 1; s <= k; ++s)
    out = sum(out, scale(product(n_l, product(power(dec.prime, k - s), power(dec.rest, s - l))), xv_pow(k - s)));
  return out;
}

RegGapFamily family_reg_gap(int a) {
  RegGapFamily f;
  if (a <= -1) {
    const int b = 2 - a;
    f.b = b;
    f.ideal = MonomialIdeal(4, {Monomial{1, 1, 0, 0}, Monomial{1, 0, b, 0}, Monomial{0, 1, 0, b}});
    f.expected_reg = b + 1;
    f.expected_reg_gradient = 2 * b - 1;
  } else if (a == 0) {
    f.ideal = family_overlap_run(3);
    f.expected_reg = 3;
    f.expected_reg_gradient = 3;
  } else {
    const int c = 2;
    const int b = a + 1;
    f.b = b;
    f.c = c;
    std::vector<Monomial> gens;
    for (int i = 0; i < c; ++i) gens.push_back(Monomial{c - i, i});
    gens.push_back(Monomial{0, b});
    f.ideal = MonomialIdeal(2, std::move(gens));
    f.expected_reg = b;
    f.expected_reg_gradient = c - 1;
  }
  return f;
}

MonomialIdeal family_overlap_run(int d) {
  if (d < 3) throw DomainError("overlap family needs d >= 3");
  const int n = 2 * d;
  std::vector<Monomial> gens;
  for (int i = 1; i <= d + 1; ++i) {
    std::vector<int> vars;
    for (int j = 0; j < d; ++j) vars.push_back(i + j);
    gens.push_back(Monomial::squarefree(n, vars));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace monograd
