#include "monograd/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "monograd/errors.hpp"

namespace monograd {

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix shapes do not compose");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

namespace {

struct Overflow {};

// Checked int64 arithmetic; throws Overflow so the caller can switch to GMP.
struct Checked {
  using value_type = std::int64_t;
  static value_type from(std::int64_t v) { return v; }
  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type sub(value_type a, value_type b) {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
  static bool is_zero(const value_type& v) { return v == 0; }
  static bool is_one(const value_type& v) { return v == 1 || v == -1; }
  static value_type div(value_type a, value_type b) { return a / b; }
};

struct Big {
  using value_type = mpz_class;
  static value_type from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  static bool is_one(const value_type& v) { return abs(v) == 1; }
  static value_type div(const value_type& a, const value_type& b) { return a / b; }
};

template <class Arith>
using Vec = std::vector<std::pair<std::uint32_t, typename Arith::value_type>>;

// v <- a*v - b*p, both sorted by row index.
template <class Arith>
Vec<Arith> combine(const Vec<Arith>& v, const typename Arith::value_type& a, const Vec<Arith>& p,
                   const typename Arith::value_type& b) {
  Vec<Arith> out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
      out.emplace_back(v[i].first, Arith::mul(a, v[i].second));
      ++i;
    } else if (i == v.size() || p[j].first < v[i].first) {
      out.emplace_back(p[j].first, Arith::sub(Arith::from(0), Arith::mul(b, p[j].second)));
      ++j;
    } else {
      auto val = Arith::sub(Arith::mul(a, v[i].second), Arith::mul(b, p[j].second));
      if (!Arith::is_zero(val)) out.emplace_back(v[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Arith>
void remove_content(Vec<Arith>& v) {
  if (v.empty()) return;
  auto g = Arith::from(0);
  for (const auto& [r, x] : v) {
    g = Arith::gcd(g, x);
    if (Arith::is_one(g)) return;
  }
  for (auto& [r, x] : v) x = Arith::div(x, g);
}

template <class Arith>
std::size_t rank_impl(const std::vector<SparseColumn>& columns) {
  // Pivot columns keyed by their largest row index.
  std::unordered_map<std::uint32_t, Vec<Arith>> pivots;
  std::size_t r = 0;
  for (const auto& col : columns) {
    Vec<Arith> v;
    v.reserve(col.size());
    for (const auto& [row, x] : col)
      if (x != 0) v.emplace_back(row, Arith::from(x));
    while (!v.empty()) {
      auto it = pivots.find(v.back().first);
      if (it == pivots.end()) break;
      const auto& p = it->second;
      const auto a = p.back().second;
      const auto b = v.back().second;
      const auto g = Arith::gcd(a, b);
      v = combine<Arith>(v, Arith::div(a, g), p, Arith::div(b, g));
      remove_content<Arith>(v);
    }
    if (!v.empty()) {
      const auto key = v.back().first;
      pivots.emplace(key, std::move(v));
      ++r;
    }
  }
  return r;
}

}  // namespace

std::size_t rank(std::vector<SparseColumn> columns) {
  for (auto& c : columns) std::sort(c.begin(), c.end());
  try {
    return rank_impl<Checked>(columns);
  } catch (const Overflow&) {
    return rank_impl<Big>(columns);
  }
}

std::size_t rank(const IntMatrix& matrix) {
  std::vector<SparseColumn> cols(matrix.cols());
  for (std::size_t c = 0; c < matrix.cols(); ++c)
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      if (matrix.at(r, c) != 0) cols[c].emplace_back(static_cast<std::uint32_t>(r), matrix.at(r, c));
  return rank(std::move(cols));
}

}  // namespace monograd
