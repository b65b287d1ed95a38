#include "monograd/structure.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "monograd/errors.hpp"

namespace monograd {

namespace {

// Fast path of linear_colon without allocating the colon generators.
bool colon_is_linear(const std::vector<const Monomial*>& prefix, const Monomial& u, std::vector<int>* vars) {
  const auto ue = u.exponents();
  const std::size_t n = ue.size();
  std::vector<bool> linear(n, false);
  for (const Monomial* p : prefix) {
    const auto pe = p->exponents();
    std::int64_t deg = 0;
    std::size_t last = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (pe[t] > ue[t]) {
        deg += pe[t] - ue[t];
        last = t;
        if (deg > 1) break;
      }
    }
    if (deg == 0) return false;  // p divides u: colon is the unit ideal
    if (deg == 1) linear[last] = true;
  }
  for (const Monomial* p : prefix) {
    const auto pe = p->exponents();
    bool covered = false;
    for (std::size_t t = 0; t < n && !covered; ++t) covered = linear[t] && pe[t] > ue[t];
    if (!covered) return false;
  }
  if (vars) {
    vars->clear();
    for (std::size_t t = 0; t < n; ++t)
      if (linear[t]) vars->push_back(static_cast<int>(t) + 1);
  }
  return true;
}

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
    std::size_t h = 0;
    for (auto w : words) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class LqSearcher {
 public:
  LqSearcher(const MonomialIdeal& ideal, std::size_t budget)
      : gens_(ideal.gens()), budget_(budget), chosen_((gens_.size() + 63) / 64, 0) {}

  LinearQuotientSearch run() {
    LinearQuotientSearch result;
    try {
      if (dfs()) {
        QuotientOrder q;
        std::vector<const Monomial*> prefix;
        for (auto idx : order_) {
          std::vector<int> vars;
          if (!prefix.empty()) colon_is_linear(prefix, gens_[idx], &vars);
          q.colons.push_back(vars);
          q.order.push_back(gens_[idx]);
          prefix.push_back(&gens_[idx]);
        }
        result.order = std::move(q);
      }
    } catch (const BudgetExhausted&) {
      result.complete = false;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  struct BudgetExhausted {};

  bool is_chosen(std::size_t i) const { return (chosen_[i / 64] >> (i % 64)) & 1u; }
  void flip(std::size_t i) { chosen_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool dfs() {
    if (budget_ && ++nodes_ > budget_) throw BudgetExhausted{};
    if (!budget_) ++nodes_;
    if (order_.size() == gens_.size()) return true;
    std::vector<const Monomial*> prefix;
    prefix.reserve(order_.size());
    for (auto idx : order_) prefix.push_back(&gens_[idx]);
    for (std::size_t c = 0; c < gens_.size(); ++c) {
      if (is_chosen(c)) continue;
      if (!prefix.empty() && !colon_is_linear(prefix, gens_[c], nullptr)) continue;
      flip(c);
      if (!dead_.count(chosen_)) {
        order_.push_back(c);
        if (dfs()) return true;
        order_.pop_back();
      }
      flip(c);
    }
    dead_.insert(chosen_);
    return false;
  }

  const std::vector<Monomial>& gens_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::uint64_t> chosen_;
  std::vector<std::size_t> order_;
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> dead_;
};

}  // namespace

std::optional<std::vector<int>> linear_colon(std::span<const Monomial> prefix, const Monomial& u) {
  std::vector<const Monomial*> ptrs;
  for (const auto& p : prefix) {
    if (p.n() != u.n()) throw DimensionMismatch("colon operands over different variable counts");
    ptrs.push_back(&p);
  }
  std::vector<int> vars;
  if (!colon_is_linear(ptrs, u, &vars)) return std::nullopt;
  return vars;
}

bool is_quotient_order(const MonomialIdeal& ideal, std::span<const Monomial> order) {
  if (order.size() != ideal.size()) return false;
  std::vector<Monomial> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  if (sorted != ideal.gens()) return false;
  std::vector<const Monomial*> prefix;
  for (const auto& u : order) {
    if (!prefix.empty() && !colon_is_linear(prefix, u, nullptr)) return false;
    prefix.push_back(&u);
  }
  return true;
}

LinearQuotientSearch search_linear_quotients(const MonomialIdeal& ideal, std::size_t node_budget,
                                             const Limits& limits) {
  if (ideal.is_zero()) throw DomainError("linear quotients of the zero ideal are undefined");
  if (ideal.size() > limits.lq_generators)
    throw ResourceError(std::to_string(ideal.size()) + " generators exceed lq-generators cap " +
                        std::to_string(limits.lq_generators));
  return LqSearcher(ideal, node_budget).run();
}

std::optional<QuotientOrder> linear_quotients_order(const MonomialIdeal& ideal, const Limits& limits) {
  return search_linear_quotients(ideal, 0, limits).order;
}

namespace {

std::string memo_key(const MonomialIdeal& ideal) {
  const auto c = compress_support(ideal);
  std::string key = std::to_string(c.n()) + ':';
  for (const auto& g : c.gens()) {
    for (auto e : g.exponents()) {
      key += std::to_string(e);
      key += ',';
    }
    key += ';';
  }
  return key;
}

struct Split {
  MonomialIdeal with_vertex;
  MonomialIdeal without_vertex;
};

// The unique candidate splitting at `var`, if it satisfies I_2 ⊆ I_1.
std::optional<Split> split_at(const MonomialIdeal& ideal, int var) {
  std::vector<Monomial> g1, g2;
  for (const auto& g : ideal.gens()) {
    if (g.exponent(var) > 0) {
      g1.push_back(g.divide_var(var));
    } else {
      g2.push_back(g);
    }
  }
  if (g1.empty()) return std::nullopt;
  MonomialIdeal i1(ideal.n(), std::move(g1));
  MonomialIdeal i2(ideal.n(), std::move(g2));
  if (!is_subideal(i2, i1)) return std::nullopt;
  return Split{std::move(i1), std::move(i2)};
}

bool is_base_case(const MonomialIdeal& ideal) { return ideal.size() <= 1; }

class Splitter {
 public:
  bool decide(const MonomialIdeal& ideal) {
    if (is_base_case(ideal)) return true;
    const auto key = memo_key(ideal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (int v : ideal_support(ideal)) {
      auto split = split_at(ideal, v);
      if (split && decide(split->with_vertex) && decide(split->without_vertex)) {
        ok = true;
        break;
      }
    }
    memo_.emplace(key, ok);
    return ok;
  }

  std::unique_ptr<SplitNode> witness(const MonomialIdeal& ideal) {
    auto node = std::make_unique<SplitNode>();
    node->ideal = ideal;
    if (is_base_case(ideal)) return node;
    for (int v : ideal_support(ideal)) {
      auto split = split_at(ideal, v);
      if (split && decide(split->with_vertex) && decide(split->without_vertex)) {
        node->vertex = v;
        node->with_vertex = witness(split->with_vertex);
        node->without_vertex = witness(split->without_vertex);
        return node;
      }
    }
    return node;
  }

 private:
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

VertexSplitResult vertex_splitting(const MonomialIdeal& ideal) {
  Splitter splitter;
  VertexSplitResult result;
  result.splittable = splitter.decide(ideal);
  if (result.splittable) result.witness = splitter.witness(ideal);
  return result;
}

bool is_vertex_splittable(const MonomialIdeal& ideal) {
  Splitter splitter;
  return splitter.decide(ideal);
}

bool is_polymatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || !ideal.is_equigenerated()) return false;
  const auto& gens = ideal.gens();
  const std::unordered_set<Monomial> bases(gens.begin(), gens.end());
  const int n = ideal.n();
  for (const auto& u : gens) {
    for (const auto& v : gens) {
      for (int i = 1; i <= n; ++i) {
        if (u.exponent(i) <= v.exponent(i)) continue;
        const Monomial w = u.divide_var(i);
        bool exchanged = false;
        for (int j = 1; j <= n && !exchanged; ++j)
          exchanged = u.exponent(j) < v.exponent(j) && bases.count(w.times_var(j));
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

bool is_componentwise_polymatroidal(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_zero()) return false;
  const auto alpha = static_cast<int>(ideal.gens().front().degree());
  const auto omega = static_cast<int>(ideal.gens().back().degree());
  MonomialIdeal top = ideal;
  for (int j = alpha; j <= omega; ++j) {
    top = degree_component(ideal, j, limits);
    if (!is_polymatroidal(top)) return false;
  }
  const auto next = degree_component(ideal, omega + 1, limits);
  return next == product(MonomialIdeal::maximal(ideal.n()), top);
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.gens()) {
    const int m = u.max_var();
    if (m == 0) continue;
    const Monomial base = u.divide_var(m);
    for (int i = 1; i < m; ++i)
      if (!contains(ideal, base.times_var(i))) return false;
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.gens()) {
    for (int j : u.support()) {
      const Monomial base = u.divide_var(j);
      for (int i = 1; i < j; ++i)
        if (!contains(ideal, base.times_var(i))) return false;
    }
  }
  return true;
}

}  // namespace monograd
