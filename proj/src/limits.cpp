#include "monograd/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "monograd/errors.hpp"

namespace monograd {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Limits Limits::parse(std::string_view spec) {
  Limits limits;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;

    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("cap entry without '=': " + std::string(item));
    const auto key = trim(item.substr(0, eq));
    const auto text = trim(item.substr(eq + 1));
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw ParseError("cap value is not a nonnegative integer: " + std::string(item));

    if (key == "polarized-vars") {
      limits.polarized_vars = value;
    } else if (key == "component-enum") {
      limits.component_enum = value;
    } else if (key == "lq-generators") {
      limits.lq_generators = value;
    } else if (key == "colex-enum") {
      limits.colex_enum = value;
    } else if (key == "koszul-enum") {
      limits.koszul_enum = value;
    } else {
      throw ParseError("unknown cap key: " + std::string(key));
    }
  }
  return limits;
}

Limits Limits::from_env() {
  const char* env = std::getenv("MONOGRAD_CAPS");
  return env ? parse(env) : Limits{};
}

}  // namespace monograd
