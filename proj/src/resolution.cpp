#include "monograd/resolution.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <unordered_set>

#include "monograd/errors.hpp"
#include "monograd/gradient.hpp"
#include "monograd/structure.hpp"

namespace monograd {

namespace {

// Budget for the linear-quotients shortcut under Engine::Auto; past it the
// Betti-table engines take over.
constexpr std::size_t kAutoLqNodeBudget = 20'000;

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw DomainError(std::string(what) + " of the zero ideal is undefined");
  if (ideal.is_unit()) throw DomainError(std::string(what) + " needs a proper ideal");
}

}  // namespace

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

BettiTable BettiTable::as(BettiConvention convention) const {
  if (convention == convention_) return *this;
  BettiTable out(convention);
  if (convention == BettiConvention::Ideal) {
    for (const auto& [key, v] : entries_)
      if (key.first >= 1) out.add(key.first - 1, key.second, v);
  } else {
    out.add(0, 0, 1);
    for (const auto& [key, v] : entries_) out.add(key.first + 1, key.second, v);
  }
  return out;
}

std::int64_t BettiTable::regularity() const {
  const BettiTable table = as(BettiConvention::Ideal);
  if (table.entries_.empty()) throw DomainError("regularity of an empty Betti table");
  std::int64_t reg = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, v] : table.entries_) reg = std::max<std::int64_t>(reg, key.second - key.first);
  return reg;
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::Auto: return "auto";
    case Engine::Hochster: return "hochster";
    case Engine::Koszul: return "koszul";
    case Engine::LinearQuotients: return "linear-quotients";
  }
  return "auto";
}

Engine parse_engine(const std::string& name) {
  if (name == "auto") return Engine::Auto;
  if (name == "hochster") return Engine::Hochster;
  if (name == "koszul") return Engine::Koszul;
  if (name == "linear-quotients" || name == "lq") return Engine::LinearQuotients;
  throw ParseError("unknown engine: " + name);
}

Polarization polarize(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  std::vector<int> top(static_cast<std::size_t>(n), 0);
  for (const auto& g : ideal.gens())
    for (int v = 1; v <= n; ++v) top[static_cast<std::size_t>(v - 1)] = std::max(top[static_cast<std::size_t>(v - 1)], g.exponent(v));

  Polarization out;
  std::vector<int> offset(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    offset[static_cast<std::size_t>(v - 1)] = static_cast<int>(out.variables.size());
    for (int c = 1; c <= top[static_cast<std::size_t>(v - 1)]; ++c) out.variables.emplace_back(v, c);
  }
  const int m = static_cast<int>(out.variables.size());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(m), 0);
    for (int v = 1; v <= n; ++v)
      for (int c = 0; c < g.exponent(v); ++c) e[static_cast<std::size_t>(offset[static_cast<std::size_t>(v - 1)] + c)] = 1;
    gens.emplace_back(std::move(e));
  }
  out.ideal = MonomialIdeal(m, std::move(gens));
  return out;
}

std::uint64_t hochster_betti(const MonomialIdeal& ideal, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("Betti indices must be nonnegative");
  if (ideal.is_unit()) throw DomainError("Hochster's formula needs a proper ideal");
  const auto delta = stanley_reisner(ideal);
  const int n = ideal.n();
  if (j > n) return 0;
  const int s = j - i - 1;
  if (s < -1) return 0;

  std::uint64_t total = 0;
  if (j == 0) return s == -1 ? reduced_homology(delta, 0)[0] : 0;
  // Gosper's hack over the j-subsets of [n].
  VertexMask w = j == 64 ? ~VertexMask{0} : (VertexMask{1} << j) - 1;
  const VertexMask limit = delta.full_mask();
  while (true) {
    const auto h = reduced_homology(delta, w);
    total += h[static_cast<std::size_t>(s + 1)];
    const VertexMask c = w & (~w + 1);
    const VertexMask r = w + c;
    if (r == 0 || (r & ~limit)) break;
    const VertexMask next = (((r ^ w) >> 2) / c) | r;
    if (next & ~limit) break;
    w = next;
  }
  return total;
}

BettiTable hochster_table(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper_nonzero(ideal, "Hochster table");
  const auto delta = stanley_reisner(ideal);
  if (static_cast<std::size_t>(ideal.n()) > limits.polarized_vars)
    throw ResourceError("Hochster ambient of " + std::to_string(ideal.n()) +
                        " variables exceeds polarized-vars cap " + std::to_string(limits.polarized_vars));

  // Only unions of minimal nonfaces can carry homology; any other W leaves a
  // vertex that is a cone point of Δ_W.
  std::unordered_set<VertexMask> lattice{0};
  std::vector<VertexMask> order{0};
  for (auto nf : delta.minimal_nonfaces()) {
    const std::size_t count = order.size();
    for (std::size_t k = 0; k < count; ++k) {
      const VertexMask u = order[k] | nf;
      if (lattice.insert(u).second) order.push_back(u);
    }
  }

  BettiTable table(BettiConvention::Quotient);
  for (auto w : order) {
    const int j = cardinality(w);
    const auto h = reduced_homology(delta, w);
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      const int s = static_cast<int>(idx) - 1;
      table.add(j - s - 1, j, h[idx]);
    }
  }
  return table;
}

namespace {

// Homology of the Koszul complex of S/I in multidegree `a`. Basis of K_i:
// subsets F ⊆ supp(a), |F| = i, with x^{a-F} ∉ I.
std::vector<std::size_t> koszul_multidegree(const MonomialIdeal& ideal, const Monomial& a) {
  const auto supp = a.support();
  const int s = static_cast<int>(supp.size());
  const std::uint32_t subsets = 1u << s;

  std::vector<bool> alive(subsets, false);
  std::vector<std::vector<std::uint32_t>> layer(static_cast<std::size_t>(s) + 1);
  std::vector<std::uint32_t> index(subsets, 0);
  for (std::uint32_t f = 0; f < subsets; ++f) {
    std::vector<std::int32_t> e(a.exponents().begin(), a.exponents().end());
    for (int k = 0; k < s; ++k)
      if (f & (1u << k)) --e[static_cast<std::size_t>(supp[static_cast<std::size_t>(k)] - 1)];
    if (!contains(ideal, Monomial(std::move(e)))) {
      alive[f] = true;
      auto& l = layer[static_cast<std::size_t>(std::popcount(f))];
      index[f] = static_cast<std::uint32_t>(l.size());
      l.push_back(f);
    }
  }

  // rank_d[i] = rank of d_i : K_i -> K_{i-1}.
  std::vector<std::size_t> rank_d(static_cast<std::size_t>(s) + 2, 0);
  for (int i = 1; i <= s; ++i) {
    std::vector<SparseColumn> cols;
    for (auto f : layer[static_cast<std::size_t>(i)]) {
      SparseColumn col;
      int below = 0;
      for (int k = 0; k < s; ++k) {
        if (!(f & (1u << k))) continue;
        const std::uint32_t g = f & ~(1u << k);
        if (alive[g]) col.emplace_back(index[g], (below % 2) ? -1 : 1);
        ++below;
      }
      cols.push_back(std::move(col));
    }
    rank_d[static_cast<std::size_t>(i)] = rank(std::move(cols));
  }
  std::vector<std::size_t> h(static_cast<std::size_t>(s) + 1, 0);
  for (int i = 0; i <= s; ++i)
    h[static_cast<std::size_t>(i)] = layer[static_cast<std::size_t>(i)].size() -
                                     rank_d[static_cast<std::size_t>(i)] -
                                     rank_d[static_cast<std::size_t>(i) + 1];
  return h;
}

std::size_t strand_size(int n, int j, std::size_t cap) {
  if (n == 0) return j == 0 ? 1 : 0;
  long double c = 1;
  for (int k = 1; k <= j; ++k) {
    c = c * (n - 1 + k) / k;
    if (c > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(c + 0.5L);
}

void check_strand(const MonomialIdeal& ideal, int j, const Limits& limits) {
  if (ideal.n() > 30) throw ResourceError("Koszul oracle is limited to 30 variables");
  if (strand_size(ideal.n(), j, limits.koszul_enum) > limits.koszul_enum)
    throw ResourceError("degree-" + std::to_string(j) + " Koszul strand exceeds koszul-enum cap " +
                        std::to_string(limits.koszul_enum));
}

}  // namespace

std::uint64_t koszul_betti_oracle(const MonomialIdeal& ideal, int i, int j, const Limits& limits) {
  if (i < 0 || j < 0) throw DomainError("Betti indices must be nonnegative");
  check_strand(ideal, j, limits);
  std::uint64_t total = 0;
  for (const auto& a : monomials_of_degree(ideal.n(), j)) {
    const auto h = koszul_multidegree(ideal, a);
    if (static_cast<std::size_t>(i) < h.size()) total += h[static_cast<std::size_t>(i)];
  }
  return total;
}

BettiTable koszul_table(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_unit()) throw DomainError("Koszul table needs a proper ideal");
  Monomial top = Monomial::unit(ideal.n());
  for (const auto& g : ideal.gens()) top = top.lcm(g);
  const int max_j = static_cast<int>(top.degree());
  BettiTable table(BettiConvention::Quotient);
  for (int j = 0; j <= max_j; ++j) {
    check_strand(ideal, j, limits);
    for (const auto& a : monomials_of_degree(ideal.n(), j)) {
      const auto h = koszul_multidegree(ideal, a);
      for (std::size_t i = 0; i < h.size(); ++i) table.add(static_cast<int>(i), j, h[i]);
    }
  }
  return table;
}

namespace {

// Squarefree model of `ideal` in its support variables, if within the cap.
std::optional<MonomialIdeal> hochster_model(const MonomialIdeal& ideal, const Limits& limits) {
  MonomialIdeal model = ideal.is_squarefree() ? compress_support(ideal) : polarize(ideal).ideal;
  const auto cap = std::min<std::size_t>(limits.polarized_vars, kMaxVertices);
  if (static_cast<std::size_t>(model.n()) > cap) return std::nullopt;
  return model;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, Engine engine, const Limits& limits) {
  require_proper_nonzero(ideal, "Betti table");
  switch (engine) {
    case Engine::Hochster: {
      auto model = hochster_model(ideal, limits);
      if (!model)
        throw ResourceError("polarization exceeds polarized-vars cap " + std::to_string(limits.polarized_vars) +
                            "; try --engine koszul or the linear-quotients shortcut");
      return hochster_table(*model, limits).as(BettiConvention::Ideal);
    }
    case Engine::Koszul:
      return koszul_table(ideal, limits).as(BettiConvention::Ideal);
    case Engine::Auto: {
      if (auto model = hochster_model(ideal, limits))
        return hochster_table(*model, limits).as(BettiConvention::Ideal);
      return koszul_table(ideal, limits).as(BettiConvention::Ideal);
    }
    case Engine::LinearQuotients:
      break;
  }
  throw DomainError("the linear-quotients engine yields regularity only, not a Betti table");
}

RegularityResult regularity_report(const MonomialIdeal& ideal, Engine engine, const Limits& limits) {
  if (ideal.is_zero()) throw DomainError("regularity of the zero ideal is undefined");
  if (ideal.is_unit()) return {0, engine};
  const std::int64_t omega = ideal.gens().back().degree();

  switch (engine) {
    case Engine::LinearQuotients: {
      if (!linear_quotients_order(ideal, limits))
        throw DomainError("ideal has no linear quotients order; use another engine");
      return {omega, Engine::LinearQuotients};
    }
    case Engine::Hochster:
    case Engine::Koszul:
      return {betti_table(ideal, engine, limits).regularity(), engine};
    case Engine::Auto: {
      if (ideal.size() <= limits.lq_generators) {
        const auto search = search_linear_quotients(ideal, kAutoLqNodeBudget, limits);
        if (search.order) return {omega, Engine::LinearQuotients};
      }
      if (auto model = hochster_model(ideal, limits))
        return {hochster_table(*model, limits).as(BettiConvention::Ideal).regularity(), Engine::Hochster};
      return {koszul_table(ideal, limits).as(BettiConvention::Ideal).regularity(), Engine::Koszul};
    }
  }
  return {0, engine};
}

std::int64_t regularity(const MonomialIdeal& ideal, Engine engine, const Limits& limits) {
  return regularity_report(ideal, engine, limits).value;
}

bool has_linear_resolution(const MonomialIdeal& ideal, Engine engine, const Limits& limits) {
  require_proper_nonzero(ideal, "linear resolution test");
  if (!ideal.is_equigenerated()) return false;
  return regularity(ideal, engine, limits) == ideal.gens().front().degree();
}

DifferentialReport differential_linear_resolution(const MonomialIdeal& ideal, Engine engine,
                                                  const Limits& limits) {
  require_proper_nonzero(ideal, "differential linear resolution test");
  if (!ideal.is_equigenerated())
    throw DomainError("differential linear resolution is defined for equigenerated ideals");
  const auto alpha = ideal.gens().front().degree();
  DifferentialReport report;
  MonomialIdeal current = ideal;
  for (std::int64_t l = 0; l <= alpha; ++l) {
    const auto r = regularity_report(current, engine, limits);
    GradientLevel level{static_cast<int>(l), alpha - l, r.value, r.engine};
    report.holds = report.holds && level.linear();
    report.levels.push_back(level);
    current = gradient(current);
  }
  return report;
}

bool has_differential_linear_resolution(const MonomialIdeal& ideal, Engine engine, const Limits& limits) {
  return differential_linear_resolution(ideal, engine, limits).holds;
}

}  // namespace monograd
