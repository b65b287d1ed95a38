#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monograd/errors.hpp"
#include "monograd/families.hpp"
#include "monograd/gradient.hpp"
#include "monograd/graph.hpp"
#include "monograd/io.hpp"
#include "monograd/kruskal.hpp"
#include "monograd/resolution.hpp"
#include "monograd/structure.hpp"
#include "monograd/verify.hpp"

namespace py = pybind11;
namespace mg = monograd;

namespace {

// Python ints cross the boundary as decimal strings for exact big integers.
py::int_ to_py(const mg::BigInt& v) { return py::int_(py::str(v.get_str())); }
mg::BigInt from_py(const py::int_& v) { return mg::BigInt(py::str(v).cast<std::string>()); }

mg::MonomialIdeal make_ideal(int n, const py::list& gens) {
  std::vector<mg::Monomial> out;
  for (const auto& g : gens) {
    if (py::isinstance<py::str>(g)) {
      out.push_back(mg::parse_monomial(g.cast<std::string>(), n));
    } else {
      out.emplace_back(g.cast<std::vector<std::int32_t>>());
    }
  }
  return mg::MonomialIdeal(n, std::move(out));
}

std::vector<std::vector<std::int32_t>> exponents(const mg::MonomialIdeal& i) {
  std::vector<std::vector<std::int32_t>> out;
  for (const auto& g : i.gens()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_monograd, m) {
  m.doc() = "Monomial ideals, gradient ideals and their Betti numbers";

  auto base = py::register_exception<mg::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<mg::DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<mg::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<mg::ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<mg::OverflowError>(m, "ExponentOverflowError", base.ptr());
  py::register_exception<mg::ParseError>(m, "ParseError", base.ptr());

  py::class_<mg::MonomialIdeal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("n"), py::arg("gens"))
      .def_static("zero", &mg::MonomialIdeal::zero)
      .def_static("unit", &mg::MonomialIdeal::unit)
      .def_static("maximal", &mg::MonomialIdeal::maximal)
      .def_property_readonly("n", &mg::MonomialIdeal::n)
      .def_property_readonly("gens", &exponents)
      .def_property_readonly("is_zero", &mg::MonomialIdeal::is_zero)
      .def_property_readonly("is_unit", &mg::MonomialIdeal::is_unit)
      .def("__len__", &mg::MonomialIdeal::size)
      .def("__eq__", [](const mg::MonomialIdeal& a, const mg::MonomialIdeal& b) { return a == b; })
      .def("__add__", [](const mg::MonomialIdeal& a, const mg::MonomialIdeal& b) { return mg::sum(a, b); })
      .def("__mul__", [](const mg::MonomialIdeal& a, const mg::MonomialIdeal& b) { return mg::product(a, b); })
      .def("__pow__", [](const mg::MonomialIdeal& a, int k) { return mg::power(a, k); })
      .def("__str__", &mg::MonomialIdeal::to_string)
      .def("__repr__", [](const mg::MonomialIdeal& i) { return "Ideal" + i.to_string(); })
      .def("to_json", &mg::serialize_ideal)
      .def_static("from_json", [](const std::string& s) { return mg::parse_ideal(s); });

  m.def("colon", &mg::colon_by_variable, py::arg("ideal"), py::arg("var"));
  m.def("degree_component", [](const mg::MonomialIdeal& i, int j) { return mg::degree_component(i, j); });
  m.def("stats", [](const mg::MonomialIdeal& i) {
    const auto s = mg::generator_stats(i);
    py::dict d;
    d["alpha"] = s.alpha;
    d["omega"] = s.omega;
    d["mu"] = s.mu;
    d["support"] = s.support;
    return d;
  });

  m.def("gradient", &mg::gradient);
  m.def("gradient_via_colon", &mg::gradient_via_colon);
  m.def("iterated_gradient", &mg::iterated_gradient, py::arg("ideal"), py::arg("order"));

  m.def(
      "regularity",
      [](const mg::MonomialIdeal& i, const std::string& engine) { return mg::regularity(i, mg::parse_engine(engine)); },
      py::arg("ideal"), py::arg("engine") = "auto");
  m.def(
      "betti_table",
      [](const mg::MonomialIdeal& i, const std::string& engine, bool quotient) {
        auto t = mg::betti_table(i, mg::parse_engine(engine));
        if (quotient) t = t.as(mg::BettiConvention::Quotient);
        return t.entries();
      },
      py::arg("ideal"), py::arg("engine") = "auto", py::arg("quotient") = false);
  m.def(
      "has_linear_resolution",
      [](const mg::MonomialIdeal& i) { return mg::has_linear_resolution(i); });
  m.def("has_differential_linear_resolution",
        [](const mg::MonomialIdeal& i) { return mg::has_differential_linear_resolution(i); });

  m.def("linear_quotients_order", [](const mg::MonomialIdeal& i) -> std::optional<std::vector<std::string>> {
    const auto q = mg::linear_quotients_order(i);
    if (!q) return std::nullopt;
    std::vector<std::string> out;
    for (const auto& u : q->order) out.push_back(u.to_string());
    return out;
  });
  m.def("is_vertex_splittable", &mg::is_vertex_splittable);
  m.def("is_polymatroidal", &mg::is_polymatroidal);
  m.def("is_componentwise_polymatroidal",
        [](const mg::MonomialIdeal& i) { return mg::is_componentwise_polymatroidal(i); });
  m.def("is_stable", &mg::is_stable);
  m.def("is_strongly_stable", &mg::is_strongly_stable);

  m.def("edge_ideal", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return mg::edge_ideal(mg::SimpleGraph(n, edges));
  });
  m.def("complementary_edge_ideal", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return mg::complementary_edge_ideal(mg::SimpleGraph(n, edges));
  });
  m.def("family_reg_gap", [](int a) {
    const auto f = mg::family_reg_gap(a);
    py::dict d;
    d["ideal"] = f.ideal;
    d["expected_reg"] = f.expected_reg;
    d["expected_reg_gradient"] = f.expected_reg_gradient;
    d["b"] = f.b;
    d["c"] = f.c;
    return d;
  });
  m.def("family_overlap_run", &mg::family_overlap_run);

  m.def("macaulay_rep", [](const py::int_& a, int d) { return mg::macaulay_rep(from_py(a), d).terms; });
  m.def("shadow_bound", [](const py::int_& a, int d) { return to_py(mg::shadow_bound(from_py(a), d)); });
  m.def("colex_shadow_oracle", [](const py::int_& a, int d) { return to_py(mg::colex_shadow_oracle(from_py(a), d)); });

  m.def("theorem_ids", &mg::theorem_ids);
  m.def(
      "verify",
      [](const std::string& id, const mg::Parameters& params, std::uint64_t seed) {
        const auto report = mg::verify_theorem(id, params, seed);
        return py::module_::import("json").attr("loads")(report.to_json(-1));
      },
      py::arg("id"), py::arg("params") = mg::Parameters{}, py::arg("seed") = 1);
}
