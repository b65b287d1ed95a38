#include "monograd/random.hpp"

#include <algorithm>
#include <unordered_set>

#include "monograd/errors.hpp"

namespace monograd {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) {}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

MonomialIdeal random_ideal(int n, int d_min, int d_max, std::size_t count, bool squarefree, Rng& rng) {
  if (n < 1 || d_min < 0 || d_max < d_min) throw DomainError("bad random ideal ranges");
  std::vector<Monomial> pool;
  for (int d = d_min; d <= d_max; ++d) {
    for (auto& u : monomials_of_degree(n, d))
      if (!squarefree || u.is_squarefree()) pool.push_back(std::move(u));
  }
  if (count > pool.size())
    throw DomainError("asked for " + std::to_string(count) + " generators but only " + std::to_string(pool.size()) +
                      " monomials qualify");
  // Partial Fisher-Yates: the first `count` slots become the sample.
  for (std::size_t i = 0; i < count; ++i)
    std::swap(pool[i], pool[static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i),
                                                                  static_cast<std::int64_t>(pool.size()) - 1))]);
  pool.resize(count);
  return MonomialIdeal(n, std::move(pool));
}

MonomialIdeal random_ideal(int n, int d_min, int d_max, std::size_t count, bool squarefree, std::uint64_t seed) {
  Rng rng(seed);
  return random_ideal(n, d_min, d_max, count, squarefree, rng);
}

MonomialIdeal random_veronese(int n, int d, Rng& rng) {
  if (n < 1 || d < 0) throw DomainError("bad Veronese parameters");
  std::vector<int> bound(static_cast<std::size_t>(n));
  for (;;) {
    int total = 0;
    for (auto& b : bound) {
      b = static_cast<int>(rng.uniform(0, d));
      total += b;
    }
    if (total >= d) break;
  }
  return veronese_type(n, bound, d).ideal;
}

Monomial random_monomial(int n, int d, Rng& rng) {
  std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, n - 1))];
  return Monomial(std::move(e));
}

namespace {

template <typename Moves>
MonomialIdeal closure(const std::vector<Monomial>& seeds, Moves moves) {
  if (seeds.empty()) throw DomainError("closure of an empty seed set");
  std::unordered_set<Monomial> seen(seeds.begin(), seeds.end());
  std::vector<Monomial> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    const Monomial u = std::move(stack.back());
    stack.pop_back();
    moves(u, [&](Monomial v) {
      if (seen.insert(v).second) stack.push_back(std::move(v));
    });
  }
  return MonomialIdeal(seeds.front().n(), std::vector<Monomial>(seen.begin(), seen.end()));
}

}  // namespace

MonomialIdeal strongly_stable_closure(const std::vector<Monomial>& seeds) {
  return closure(seeds, [](const Monomial& u, auto&& emit) {
    for (int j : u.support())
      for (int i = 1; i < j; ++i) emit(u.divide_var(j).times_var(i));
  });
}

MonomialIdeal stable_closure(const std::vector<Monomial>& seeds) {
  return closure(seeds, [](const Monomial& u, auto&& emit) {
    const int m = u.max_var();
    for (int i = 1; i < m; ++i) emit(u.divide_var(m).times_var(i));
  });
}

MonomialIdeal random_complete_intersection(int n, std::size_t mu, int d_min, int d_max, Rng& rng) {
  if (mu < 1 || static_cast<int>(mu) > n) throw DomainError("complete intersection needs 1 <= mu <= n");
  if (d_min < 1 || d_max < d_min) throw DomainError("bad degree range");
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
  rng.shuffle(vars);
  std::vector<Monomial> gens;
  std::size_t next = 0;
  for (std::size_t g = 0; g < mu; ++g) {
    const int deg = static_cast<int>(rng.uniform(d_min, d_max));
    const auto left_after = static_cast<std::int64_t>(mu - g - 1);
    const auto available = static_cast<std::int64_t>(vars.size() - next) - left_after;
    const auto width = rng.uniform(1, std::min<std::int64_t>(deg, available));
    std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
    for (std::int64_t k = 0; k < width; ++k) e[static_cast<std::size_t>(vars[next + static_cast<std::size_t>(k)] - 1)] = 1;
    for (int k = static_cast<int>(width); k < deg; ++k)
      ++e[static_cast<std::size_t>(vars[next + static_cast<std::size_t>(rng.uniform(0, width - 1))] - 1)];
    next += static_cast<std::size_t>(width);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace monograd
