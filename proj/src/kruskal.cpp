#include "monograd/kruskal.hpp"

#include <bit>
#include <unordered_set>

#include "monograd/errors.hpp"

namespace monograd {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial with negative top");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt MacaulayRep::value() const {
  BigInt total = 0;
  for (auto [top, i] : terms) total += binomial(top, i);
  return total;
}

bool MacaulayRep::well_formed() const {
  if (terms.empty()) return false;
  int expect = d;
  std::int64_t prev = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto [top, i] = terms[k];
    if (i != expect || i < 1) return false;
    if (k > 0 && top >= prev) return false;
    prev = top;
    --expect;
  }
  return terms.back().first >= terms.back().second;
}

std::string MacaulayRep::to_string() const {
  std::string out;
  for (auto [top, i] : terms) {
    if (!out.empty()) out += '+';
    out += "C(" + std::to_string(top) + "," + std::to_string(i) + ")";
  }
  return out;
}

namespace {

// Largest x ≥ i with C(x, i) ≤ a, for a ≥ 1.
std::int64_t largest_top(const BigInt& a, int i) {
  std::int64_t lo = i, hi = i + 1;
  while (binomial(hi, i) <= a) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (binomial(mid, i) <= a) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

MacaulayRep macaulay_rep(const BigInt& a, int d) {
  if (a < 1) throw DomainError("binomial expansion needs a >= 1");
  if (d < 1) throw DomainError("binomial expansion needs d >= 1");
  MacaulayRep rep;
  rep.d = d;
  BigInt rest = a;
  for (int i = d; i >= 1 && rest > 0; --i) {
    const auto top = largest_top(rest, i);
    rep.terms.emplace_back(top, i);
    rest -= binomial(top, i);
  }
  return rep;
}

BigInt shadow_bound(const BigInt& a, int d) {
  if (d < 2) throw DomainError("shadow bound needs d >= 2");
  BigInt total = 0;
  for (auto [top, i] : macaulay_rep(a, d).terms) total += binomial(top, i - 1);
  return total;
}

BigInt colex_shadow_oracle(const BigInt& a, int d, const Limits& limits) {
  if (a < 1) throw DomainError("colex oracle needs a >= 1");
  if (d < 1) throw DomainError("colex oracle needs d >= 1");
  int ground = d;
  while (binomial(ground, d) < a) {
    ++ground;
    if (ground > 64) throw ResourceError("colex oracle is limited to 64 points");
  }
  if (binomial(ground, d) > BigInt(static_cast<unsigned long>(limits.colex_enum)))
    throw ResourceError("C(" + std::to_string(ground) + "," + std::to_string(d) + ") exceeds colex-enum cap " +
                        std::to_string(limits.colex_enum));
  const auto count = a.get_ui();

  // Colex order on d-subsets is increasing order of their bitmasks.
  std::unordered_set<std::uint64_t> shadow;
  std::uint64_t set = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  for (unsigned long k = 0; k < count; ++k) {
    for (std::uint64_t rest = set; rest; rest &= rest - 1) shadow.insert(set & ~(rest & (~rest + 1)));
    if (k + 1 == count) break;
    const std::uint64_t low = set & (~set + 1);
    const std::uint64_t ripple = set + low;
    set = ripple | (((set ^ ripple) >> 2) / low);
  }
  return BigInt(static_cast<unsigned long>(shadow.size()));
}

MacaulayRep closed_form_count(int n, int d) {
  if (d < 3) throw DomainError("closed form needs d >= 3");
  if (n < 2 * d) throw DomainError("closed form needs n >= 2d");
  MacaulayRep rep;
  rep.d = d;
  for (int i = 1; i <= d - 2; ++i) rep.terms.emplace_back(n - i, d - i + 1);
  if (n <= 3 * d - 3) {
    rep.terms.emplace_back(n - d, 2);
    rep.terms.emplace_back(2 * n - 4 * d + 2, 1);
  } else if (n == 3 * d - 2) {
    rep.terms.emplace_back(n - d + 1, 2);
  } else {
    rep.terms.emplace_back(n - d + 1, 2);
    rep.terms.emplace_back(n - 3 * d + 2, 1);
  }
  return rep;
}

BigInt closed_form_shadow(int n, int d) {
  if (d < 3) throw DomainError("closed form needs d >= 3");
  if (n < 2 * d) throw DomainError("closed form needs n >= 2d");
  const BigInt full = binomial(n, d - 1);
  return n <= 3 * d - 2 ? BigInt(full - 1) : full;
}

BigInt many_generators_threshold(int n, int d) {
  if (d < 1 || d > n) throw DomainError("threshold needs 1 <= d <= n");
  return binomial(n, d) - 2 * d + 1;
}

}  // namespace monograd
