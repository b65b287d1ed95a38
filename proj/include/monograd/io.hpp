#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monograd/graph.hpp"
#include "monograd/ideal.hpp"

namespace monograd {

/// "x1^2*x3" in `n` variables. "1" and zero exponents ("x1^0") denote the
/// unit monomial; repeated variables multiply. Throws ParseError.
Monomial parse_monomial(std::string_view text, int n);

struct IdealDocument {
  int n = 0;
  /// Generators as written, before minimalization.
  std::vector<Monomial> gens;
};

/// {"n": 3, "gens": [[1,1,0], "x2*x3"]}. Throws ParseError.
IdealDocument parse_ideal_document(std::string_view json);
MonomialIdeal parse_ideal(std::string_view json);
/// Canonically ordered exponent lists.
std::string serialize_ideal(const MonomialIdeal& ideal);

/// {"n": 4, "edges": [[1,2],[2,3]]}. Throws ParseError.
SimpleGraph parse_graph(std::string_view json);
std::string serialize_graph(const SimpleGraph& graph);

}  // namespace monograd
