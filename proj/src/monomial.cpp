#include "monograd/monomial.hpp"

#include <algorithm>

#include "monograd/errors.hpp"

namespace monograd {

Monomial::Monomial(std::vector<std::int32_t> exponents) : exp_(std::move(exponents)) {
  for (auto e : exp_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial::Monomial(std::initializer_list<std::int32_t> exponents)
    : Monomial(std::vector<std::int32_t>(exponents)) {}

Monomial Monomial::unit(int n) {
  if (n < 0) throw DomainError("negative variable count");
  return Monomial(std::vector<std::int32_t>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int var) {
  if (var < 1 || var > n) throw DomainError("variable index out of range");
  std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(var - 1)] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree(int n, std::span<const int> vars) {
  std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
  for (int v : vars) {
    if (v < 1 || v > n) throw DomainError("variable index out of range");
    e[static_cast<std::size_t>(v - 1)] = 1;
  }
  return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](auto e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int Monomial::max_var() const {
  for (std::size_t i = exp_.size(); i-- > 0;)
    if (exp_[i] > 0) return static_cast<int>(i) + 1;
  return 0;
}

void Monomial::check_same_n(const Monomial& other) const {
  if (exp_.size() != other.exp_.size())
    throw DimensionMismatch("monomials over " + std::to_string(exp_.size()) + " and " +
                            std::to_string(other.exp_.size()) + " variables");
}

bool Monomial::divides(const Monomial& other) const {
  check_same_n(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_n(other);
  Monomial out = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    const std::int64_t e = std::int64_t{exp_[i]} + other.exp_[i];
    if (e > kMaxExponent) throw OverflowError("exponent exceeds 2^31-1");
    out.exp_[i] = static_cast<std::int32_t>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("monomial division is not exact");
  Monomial out = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i) out.exp_[i] -= divisor.exp_[i];
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::times_var(int var) const {
  if (var < 1 || var > n()) throw DomainError("variable index out of range");
  Monomial out = *this;
  auto& e = out.exp_[static_cast<std::size_t>(var - 1)];
  if (e == kMaxExponent) throw OverflowError("exponent exceeds 2^31-1");
  ++e;
  ++out.degree_;
  return out;
}

Monomial Monomial::divide_var(int var) const {
  if (var < 1 || var > n()) throw DomainError("variable index out of range");
  if (exp_[static_cast<std::size_t>(var - 1)] == 0)
    throw DomainError("x" + std::to_string(var) + " does not divide " + to_string());
  Monomial out = *this;
  --out.exp_[static_cast<std::size_t>(var - 1)];
  --out.degree_;
  return out;
}

Monomial Monomial::colon(const Monomial& v) const {
  check_same_n(v);
  Monomial out = *this;
  out.degree_ = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    out.exp_[i] = std::max(0, exp_[i] - v.exp_[i]);
    out.degree_ += out.exp_[i];
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_n(other);
  Monomial out = *this;
  out.degree_ = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    out.exp_[i] = std::max(exp_[i], other.exp_[i]);
    out.degree_ += out.exp_[i];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same_n(other);
  Monomial out = *this;
  out.degree_ = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    out.exp_[i] = std::min(exp_[i], other.exp_[i]);
    out.degree_ += out.exp_[i];
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exp_[i] > 1) {
      out += '^';
      out += std::to_string(exp_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

}  // namespace monograd
