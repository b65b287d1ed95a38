#include "monograd/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include <json.hpp>

#include "monograd/errors.hpp"

namespace monograd {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_number(std::string_view s, std::string_view context) {
  std::int64_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end)
    throw ParseError("bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
  return value;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

int read_n(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("document needs an integer field \"n\"");
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 0 || n > 4096) throw ParseError("\"n\" out of range: " + std::to_string(n));
  return static_cast<int>(n);
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n) {
  const auto body = trim(text);
  std::vector<std::int32_t> exps(static_cast<std::size_t>(n), 0);
  if (body == "1") return Monomial(std::move(exps));
  if (body.empty()) throw ParseError("empty monomial");
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto star = body.find('*', pos);
    const auto factor = trim(body.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.size() < 2 || factor[0] != 'x') throw ParseError("bad factor '" + std::string(factor) + "'");
    const auto caret = factor.find('^');
    const auto var = parse_number(trim(factor.substr(1, caret == std::string_view::npos ? caret : caret - 1)), text);
    const auto e = caret == std::string_view::npos ? 1 : parse_number(trim(factor.substr(caret + 1)), text);
    if (var < 1 || var > n)
      throw ParseError("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n));
    if (e < 0) throw ParseError("negative exponent in '" + std::string(text) + "'");
    auto& slot = exps[static_cast<std::size_t>(var - 1)];
    if (slot + e > std::numeric_limits<std::int32_t>::max()) throw OverflowError("exponent overflow");
    slot += static_cast<std::int32_t>(e);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(std::move(exps));
}

IdealDocument parse_ideal_document(std::string_view json) {
  const Json doc = parse_json(json);
  IdealDocument out;
  out.n = read_n(doc);
  if (!doc.contains("gens") || !doc["gens"].is_array()) throw ParseError("document needs an array field \"gens\"");
  for (const auto& g : doc["gens"]) {
    if (g.is_string()) {
      out.gens.push_back(parse_monomial(g.get<std::string>(), out.n));
    } else if (g.is_array()) {
      if (static_cast<int>(g.size()) != out.n)
        throw ParseError("exponent list of length " + std::to_string(g.size()) + ", expected " + std::to_string(out.n));
      std::vector<std::int32_t> exps;
      for (const auto& e : g) {
        if (!e.is_number_integer()) throw ParseError("non-integer exponent");
        const auto v = e.get<std::int64_t>();
        if (v < 0) throw ParseError("negative exponent");
        if (v > std::numeric_limits<std::int32_t>::max()) throw OverflowError("exponent overflow");
        exps.push_back(static_cast<std::int32_t>(v));
      }
      out.gens.emplace_back(std::move(exps));
    } else {
      throw ParseError("generator must be a string or an exponent list");
    }
  }
  return out;
}

MonomialIdeal parse_ideal(std::string_view json) {
  auto doc = parse_ideal_document(json);
  return MonomialIdeal(doc.n, std::move(doc.gens));
}

std::string serialize_ideal(const MonomialIdeal& ideal) {
  Json doc;
  doc["n"] = ideal.n();
  doc["gens"] = Json::array();
  for (const auto& g : ideal.gens()) doc["gens"].push_back(std::vector<std::int32_t>(g.exponents().begin(), g.exponents().end()));
  return doc.dump();
}

SimpleGraph parse_graph(std::string_view json) {
  const Json doc = parse_json(json);
  const int n = read_n(doc);
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("graph needs an array field \"edges\"");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return SimpleGraph(n, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_graph(const SimpleGraph& graph) {
  Json doc;
  doc["n"] = graph.n();
  doc["edges"] = Json::array();
  for (auto [i, j] : graph.edges()) doc["edges"].push_back({i, j});
  return doc.dump();
}

}  // namespace monograd
