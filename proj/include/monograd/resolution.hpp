#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monograd/ideal.hpp"
#include "monograd/limits.hpp"
#include "monograd/simplicial.hpp"

namespace monograd {

enum class BettiConvention {
  /// β_{i,j}(I) = dim Tor_i(K, I)_j.
  Ideal,
  /// β_{i,j}(S/I); β_{0,0} = 1 for proper I.
  Quotient,
};

/// Graded Betti numbers keyed by (homological index i, internal degree j).
/// Only nonzero entries are stored.
class BettiTable {
 public:
  explicit BettiTable(BettiConvention convention = BettiConvention::Ideal) : convention_(convention) {}

  BettiConvention convention() const { return convention_; }
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t value);

  /// Same numbers under the other index convention.
  BettiTable as(BettiConvention convention) const;
  /// max{j - i} under the ideal convention. Throws DomainError for an empty
  /// table.
  std::int64_t regularity() const;

  bool operator==(const BettiTable& other) const {
    return convention_ == other.convention_ && entries_ == other.entries_;
  }

 private:
  BettiConvention convention_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

enum class Engine { Auto, Hochster, Koszul, LinearQuotients };

std::string to_string(Engine engine);
/// "auto", "hochster", "koszul", "linear-quotients"; throws ParseError otherwise.
Engine parse_engine(const std::string& name);

struct Polarization {
  MonomialIdeal ideal;
  /// variables[k] = (original 1-based variable, copy index 1..e) of new variable k+1.
  std::vector<std::pair<int, int>> variables;
};

/// Standard polarization: x_i^e becomes x_{i,1} ... x_{i,e}. Variables that
/// never occur are dropped.
Polarization polarize(const MonomialIdeal& ideal);

/// β_{i,j}(S/I) by Hochster's formula: the sum over j-subsets W of
/// dim H̃_{j-i-1}(Δ_W). Requires a squarefree proper ideal.
std::uint64_t hochster_betti(const MonomialIdeal& ideal, int i, int j);

/// Full quotient-indexed table of a squarefree proper ideal via Hochster's
/// formula, summing only over W that are unions of generator supports.
BettiTable hochster_table(const MonomialIdeal& ideal, const Limits& limits = {});

/// β_{i,j}(S/I) as the i-th homology of the degree-j strand of the Koszul
/// complex of S/I, split into multidegrees. Works for any monomial ideal.
std::uint64_t koszul_betti_oracle(const MonomialIdeal& ideal, int i, int j, const Limits& limits = {});

/// Full quotient-indexed table from Koszul strands j = 0..deg lcm(G(I)).
BettiTable koszul_table(const MonomialIdeal& ideal, const Limits& limits = {});

/// Ideal-convention Betti table of a proper nonzero ideal. The Hochster
/// path polarizes non-squarefree input and is capped by
/// `limits.polarized_vars`; Auto falls back to Koszul strands past the cap.
BettiTable betti_table(const MonomialIdeal& ideal, Engine engine = Engine::Auto, const Limits& limits = {});

struct RegularityResult {
  std::int64_t value = 0;
  Engine engine = Engine::Auto;
};

/// reg I = max{j - i : β_{i,j}(I) ≠ 0}. The unit ideal has regularity 0.
/// Auto tries the linear-quotients shortcut (reg = ω), then Hochster, then
/// Koszul, and reports the engine that answered.
RegularityResult regularity_report(const MonomialIdeal& ideal, Engine engine = Engine::Auto,
                                   const Limits& limits = {});
std::int64_t regularity(const MonomialIdeal& ideal, Engine engine = Engine::Auto, const Limits& limits = {});

/// α(I) = ω(I) = reg I.
bool has_linear_resolution(const MonomialIdeal& ideal, Engine engine = Engine::Auto, const Limits& limits = {});

struct GradientLevel {
  int order = 0;
  std::int64_t expected = 0;
  std::int64_t regularity = 0;
  Engine engine = Engine::Auto;
  bool linear() const { return regularity == expected; }
};

struct DifferentialReport {
  bool holds = true;
  std::vector<GradientLevel> levels;
};

/// reg ∂^ℓ(I) = α(I) - ℓ for ℓ = 0..α(I). Needs a proper nonzero equigenerated
/// ideal.
DifferentialReport differential_linear_resolution(const MonomialIdeal& ideal, Engine engine = Engine::Auto,
                                                  const Limits& limits = {});
bool has_differential_linear_resolution(const MonomialIdeal& ideal, Engine engine = Engine::Auto,
                                        const Limits& limits = {});

}  // namespace monograd
