#include "monograd/gradient.hpp"

#include "monograd/errors.hpp"

namespace monograd {

MonomialIdeal gradient(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  std::vector<Monomial> gens;
  for (const auto& u : ideal.gens())
    for (int v : u.support()) gens.push_back(u.divide_var(v));
  return MonomialIdeal(ideal.n(), std::move(gens));
}

MonomialIdeal gradient_via_colon(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  // n = 0 leaves the sum empty; the only ideals there are 0 and S.
  if (ideal.n() == 0) return ideal;
  MonomialIdeal out = MonomialIdeal::zero(ideal.n());
  for (int i = 1; i <= ideal.n(); ++i) out = sum(out, colon_by_variable(ideal, i));
  return out;
}

MonomialIdeal iterated_gradient(const MonomialIdeal& ideal, int order) {
  if (order < 0) throw DomainError("negative gradient order");
  MonomialIdeal out = ideal;
  for (int i = 0; i < order; ++i) out = gradient(out);
  return out;
}

}  // namespace monograd
