#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monograd/limits.hpp"
#include "monograd/monomial.hpp"

namespace monograd {

/// A monomial ideal of K[x1..xn] held by its minimal generating set G(I),
/// sorted by canonical_less. Values are immutable once built.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  /// The zero ideal in `n` variables.
  explicit MonomialIdeal(int n = 0) : n_(n) {}

  /// Minimalizes and sorts `gens`. Throws DimensionMismatch when some
  /// generator is not over `n` variables.
  MonomialIdeal(int n, std::vector<Monomial> gens);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(int n);
  /// (x1, ..., xn).
  static MonomialIdeal maximal(int n);
  /// Ideal generated by the listed 1-based variables.
  static MonomialIdeal prime(int n, std::span<const int> vars);

  int n() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;
  /// All minimal generators share one degree (vacuously true for zero).
  bool is_equigenerated() const;

  /// "(x1*x2, x3^2)"; the zero ideal prints as "(0)".
  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const {
    return n_ == other.n_ && gens_ == other.gens_;
  }

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

struct GeneratorStats {
  std::int64_t alpha = 0;
  std::int64_t omega = 0;
  std::size_t mu = 0;
  /// 1-based variable indices, ascending.
  std::vector<int> support;
};

/// Divisibility-minimal elements of `gens`, canonically sorted.
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& u);
bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b);
/// a ⊆ b, checked on generators of a.
bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, int k);
/// u * I for a single monomial.
MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& u);

/// (I : x_var), 1-based variable.
MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, int var);
/// (I : u) for a monomial u.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

/// Throws DomainError on the zero ideal.
GeneratorStats generator_stats(const MonomialIdeal& ideal);

/// Union of generator supports, 1-based.
std::vector<int> ideal_support(const MonomialIdeal& ideal);

/// I_<j>: the ideal generated by the degree-j monomials of I.
/// Throws ResourceError when C(n+j-1, j) exceeds `limits.component_enum`.
MonomialIdeal degree_component(const MonomialIdeal& ideal, int j, const Limits& limits = {});

struct VeroneseResult {
  MonomialIdeal ideal;
  /// Set when d > |a|; the ideal is then zero.
  bool exceeds_bound = false;
};

/// I_{n,a,d} = (x^b : |b| = d, b <= a).
VeroneseResult veronese_type(int n, std::span<const int> bound, int d);

/// Generators have pairwise disjoint supports. DomainError on zero/unit.
bool is_complete_intersection(const MonomialIdeal& ideal);

/// The ideal restricted to its support variables, relabeled 1..|supp(I)| in
/// increasing order. `kept` receives the original 1-based indices.
MonomialIdeal compress_support(const MonomialIdeal& ideal, std::vector<int>* kept = nullptr);

/// All monomials of total degree `d` in `n` variables, canonically ordered.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace monograd
