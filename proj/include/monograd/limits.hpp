#pragma once

#include <cstddef>
#include <string_view>

namespace monograd {

/// Resource caps shared by the enumeration and search routines.
///
/// Every expensive operation takes a `const Limits&` so callers (tests, CLI,
/// Python) can tighten or relax budgets without code changes. The CLI reads
/// overrides from the MONOGRAD_CAPS environment variable, a comma separated
/// list of `key=value` pairs with keys polarized-vars, component-enum,
/// lq-generators, colex-enum and koszul-enum.
struct Limits {
  /// Variables allowed in the (polarized) Stanley-Reisner ring.
  std::size_t polarized_vars = 24;
  /// Degree-j monomials enumerated by degree_component.
  std::size_t component_enum = 1'000'000;
  /// Generators accepted by the linear-quotients search.
  std::size_t lq_generators = 64;
  /// d-subsets enumerated by the colex shadow oracle.
  std::size_t colex_enum = 1'000'000;
  /// Multidegrees visited per Koszul strand.
  std::size_t koszul_enum = 1'000'000;

  /// Parses a MONOGRAD_CAPS style string on top of the defaults.
  /// Unknown keys or malformed values throw ParseError.
  static Limits parse(std::string_view spec);
  /// Defaults overridden by MONOGRAD_CAPS when set.
  static Limits from_env();
};

}  // namespace monograd
