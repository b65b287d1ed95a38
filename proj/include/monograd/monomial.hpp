#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monograd {

/// Largest exponent a Monomial may carry; arithmetic beyond it throws
/// OverflowError.
inline constexpr std::int64_t kMaxExponent = 2147483647;

/// A monomial x1^a1 * ... * xn^an stored as its exponent vector.
///
/// Variables are addressed 1-based (`var = 1..n`) in every public function
/// that takes a variable index; `exponents()` exposes the raw 0-based storage.
class Monomial {
 public:
  Monomial() = default;
  /// Throws DomainError on a negative exponent.
  explicit Monomial(std::vector<std::int32_t> exponents);
  Monomial(std::initializer_list<std::int32_t> exponents);

  static Monomial unit(int n);
  static Monomial variable(int n, int var);
  /// Squarefree product of the listed 1-based variables.
  static Monomial squarefree(int n, std::span<const int> vars);

  int n() const { return static_cast<int>(exp_.size()); }
  std::int64_t degree() const { return degree_; }
  std::int32_t exponent(int var) const { return exp_[static_cast<std::size_t>(var - 1)]; }
  std::span<const std::int32_t> exponents() const { return exp_; }

  bool is_unit() const { return degree_ == 0; }
  bool is_squarefree() const;
  /// 1-based indices with positive exponent, ascending.
  std::vector<int> support() const;
  /// Largest variable index in the support; 0 for the unit monomial.
  int max_var() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws DomainError when `divisor` does not divide.
  Monomial operator/(const Monomial& divisor) const;
  Monomial times_var(int var) const;
  /// u / x_var; throws DomainError when x_var does not divide u.
  Monomial divide_var(int var) const;
  /// u / gcd(u, v): the generator of (u) : (v).
  Monomial colon(const Monomial& v) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// "x1^2*x3"; the unit monomial prints as "1".
  std::string to_string() const;

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

 private:
  void check_same_n(const Monomial& other) const;

  std::vector<std::int32_t> exp_;
  std::int64_t degree_ = 0;
};

/// Canonical generator order: degree ascending, then exponent vectors
/// lexicographically descending (x1 before x2 among linear forms).
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace monograd

template <>
struct std::hash<monograd::Monomial> {
  std::size_t operator()(const monograd::Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
