#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monograd/limits.hpp"

namespace monograd {

struct Check {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
  /// The statement this check exercises, e.g. "reg I - reg ∂(I) = a".
  std::string anchor;
};

struct Report {
  std::string theorem_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Check> checks;
  std::vector<std::string> engine_notes;
  std::optional<std::uint64_t> seed;

  bool passed() const;
  /// Stable key order; identical inputs give byte-identical output.
  std::string to_json(int indent = 2) const;
  /// One line per check plus notes, for terminals.
  std::string to_text() const;
};

using Parameters = std::map<std::string, std::string>;

/// Dispatchable ids, in a fixed order.
const std::vector<std::string>& theorem_ids();
/// Ids whose procedure draws random ideals.
bool is_randomized(const std::string& id);

/// Runs the verification procedure `id`. Unknown ids and unknown or
/// out-of-range parameters throw DomainError; cap violations throw
/// ResourceError.
Report verify_theorem(const std::string& id, const Parameters& params = {}, std::uint64_t seed = 1,
                      const Limits& limits = {});

}  // namespace monograd
