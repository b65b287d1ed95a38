#include "monograd/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "monograd/errors.hpp"

namespace monograd {

namespace {

void check_n(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n())
    throw DimensionMismatch("ideals over " + std::to_string(a.n()) + " and " +
                            std::to_string(b.n()) + " variables");
}

void check_n(const MonomialIdeal& a, const Monomial& u) {
  if (a.n() != u.n())
    throw DimensionMismatch("ideal over " + std::to_string(a.n()) + " variables, monomial over " +
                            std::to_string(u.n()));
}

// C(n+d-1, d), saturating at `cap + 1`.
std::size_t count_monomials(int n, int d, std::size_t cap) {
  if (n == 0) return d == 0 ? 1 : 0;
  long double c = 1;
  for (int i = 1; i <= d; ++i) {
    c = c * (n - 1 + i) / i;
    if (c > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(c + 0.5L);
}

void enumerate_degree(int n, int d, std::size_t pos, std::vector<std::int32_t>& cur,
                      std::vector<Monomial>& out) {
  if (pos + 1 == static_cast<std::size_t>(n)) {
    cur[pos] = d;
    out.emplace_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = e;
    enumerate_degree(n, d - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  for (const auto& g : gens)
    if (g.n() != n)
      throw DimensionMismatch("generator " + g.to_string() + " is not over " + std::to_string(n) +
                              " variables");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::unit(int n) { return MonomialIdeal(n, {Monomial::unit(n)}); }

MonomialIdeal MonomialIdeal::maximal(int n) {
  std::vector<Monomial> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(Monomial::variable(n, i));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::prime(int n, std::span<const int> vars) {
  std::vector<Monomial> gens;
  for (int v : vars) gens.push_back(Monomial::variable(n, v));
  return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const {
  return gens_.empty() || gens_.front().degree() == gens_.back().degree();
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) { return MonomialIdeal(n, std::move(gens)); }

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  check_n(ideal, u);
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return g.divides(u); });
}

bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_n(a, b);
  return a.gens() == b.gens();
}

bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_n(a, b);
  return std::all_of(a.gens().begin(), a.gens().end(),
                     [&](const Monomial& g) { return contains(b, g); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_n(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.n(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_n(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) gens.push_back(u * v);
  return MonomialIdeal(a.n(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 0) throw DomainError("negative ideal power");
  MonomialIdeal out = MonomialIdeal::unit(ideal.n());
  for (int i = 0; i < k; ++i) out = product(out, ideal);
  return out;
}

MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& u) {
  check_n(ideal, u);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(g * u);
  return MonomialIdeal(ideal.n(), std::move(gens));
}

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, int var) {
  if (var < 1 || var > ideal.n())
    throw DomainError("variable index " + std::to_string(var) + " out of range 1.." +
                      std::to_string(ideal.n()));
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(g.exponent(var) > 0 ? g.divide_var(var) : g);
  return MonomialIdeal(ideal.n(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  check_n(ideal, u);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(g.colon(u));
  return MonomialIdeal(ideal.n(), std::move(gens));
}

GeneratorStats generator_stats(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("generator statistics of the zero ideal are undefined");
  GeneratorStats s;
  s.alpha = ideal.gens().front().degree();
  s.omega = ideal.gens().back().degree();
  s.mu = ideal.size();
  s.support = ideal_support(ideal);
  return s;
}

std::vector<int> ideal_support(const MonomialIdeal& ideal) {
  std::vector<bool> used(static_cast<std::size_t>(ideal.n()), false);
  for (const auto& g : ideal.gens())
    for (int v : g.support()) used[static_cast<std::size_t>(v - 1)] = true;
  std::vector<int> out;
  for (int i = 0; i < ideal.n(); ++i)
    if (used[static_cast<std::size_t>(i)]) out.push_back(i + 1);
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial::unit(0));
    return out;
  }
  std::vector<std::int32_t> cur(static_cast<std::size_t>(n), 0);
  enumerate_degree(n, d, 0, cur, out);
  return out;
}

MonomialIdeal degree_component(const MonomialIdeal& ideal, int j, const Limits& limits) {
  if (j < 0) throw DomainError("negative degree component");
  const std::size_t count = count_monomials(ideal.n(), j, limits.component_enum);
  if (count > limits.component_enum)
    throw ResourceError("degree-" + std::to_string(j) + " monomials in " + std::to_string(ideal.n()) +
                        " variables exceed component-enum cap " +
                        std::to_string(limits.component_enum));

  std::unordered_set<Monomial> seen;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    if (g.degree() > j) break;
    for (const auto& m : monomials_of_degree(ideal.n(), j - static_cast<int>(g.degree()))) {
      auto u = g * m;
      if (seen.insert(u).second) gens.push_back(std::move(u));
    }
  }
  return MonomialIdeal(ideal.n(), std::move(gens));
}

VeroneseResult veronese_type(int n, std::span<const int> bound, int d) {
  if (static_cast<int>(bound.size()) != n)
    throw DimensionMismatch("exponent bound has length " + std::to_string(bound.size()) +
                            ", expected " + std::to_string(n));
  std::int64_t total = 0;
  for (int a : bound) {
    if (a < 0) throw DomainError("negative exponent bound");
    total += a;
  }
  if (d < 0) throw DomainError("negative degree");
  if (d > total) return {MonomialIdeal::zero(n), true};

  std::vector<Monomial> gens;
  std::vector<std::int32_t> cur(static_cast<std::size_t>(n), 0);
  // Suffix capacity lets the recursion prune infeasible prefixes.
  std::vector<std::int64_t> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + bound[static_cast<std::size_t>(i)];

  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n) {
      if (left == 0) gens.emplace_back(cur);
      return;
    }
    if (left > suffix[static_cast<std::size_t>(pos)]) return;
    const int top = std::min(left, bound[static_cast<std::size_t>(pos)]);
    for (int e = top; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, d);
  return {MonomialIdeal(n, std::move(gens)), false};
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw DomainError("complete-intersection test needs a proper nonzero ideal");
  std::vector<bool> used(static_cast<std::size_t>(ideal.n()), false);
  for (const auto& g : ideal.gens()) {
    for (int v : g.support()) {
      if (used[static_cast<std::size_t>(v - 1)]) return false;
      used[static_cast<std::size_t>(v - 1)] = true;
    }
  }
  return true;
}

MonomialIdeal compress_support(const MonomialIdeal& ideal, std::vector<int>* kept) {
  const auto support = ideal_support(ideal);
  const int m = static_cast<int>(support.size());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i)] = g.exponent(support[static_cast<std::size_t>(i)]);
    gens.emplace_back(std::move(e));
  }
  if (kept) *kept = support;
  return MonomialIdeal(m, std::move(gens));
}

}  // namespace monograd
