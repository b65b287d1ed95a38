// Command-line front end. Exit status: 0 computed/true/pass, 1 false/fail,
// 2 usage or resource error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monograd/errors.hpp"
#include "monograd/families.hpp"
#include "monograd/gradient.hpp"
#include "monograd/graph.hpp"
#include "monograd/io.hpp"
#include "monograd/kruskal.hpp"
#include "monograd/resolution.hpp"
#include "monograd/structure.hpp"
#include "monograd/verify.hpp"

namespace mg = monograd;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw mg::ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

mg::MonomialIdeal load_ideal(const std::string& path, bool no_minimalize) {
  auto doc = mg::parse_ideal_document(read_input(path));
  if (no_minimalize) {
    for (const auto& g : doc.gens) std::cerr << "raw generator: " << g.to_string() << '\n';
  }
  return mg::MonomialIdeal(doc.n, std::move(doc.gens));
}

Json ideal_json(const mg::MonomialIdeal& ideal) { return Json::parse(mg::serialize_ideal(ideal)); }

mg::BigInt parse_big(const std::string& text) {
  mg::BigInt value;
  if (text.empty() || value.set_str(text, 10) != 0) throw mg::ParseError("not an integer: " + text);
  return value;
}

// Property checks return true/false; degenerate inputs outside a property's
// domain count as false rather than an error.
bool check_property(const std::string& property, const mg::MonomialIdeal& ideal, mg::Engine engine,
                    const mg::Limits& limits) {
  try {
    if (property == "linear-resolution") return mg::has_linear_resolution(ideal, engine, limits);
    if (property == "differential-linear-resolution")
      return ideal.is_equigenerated() && mg::has_differential_linear_resolution(ideal, engine, limits);
    if (property == "linear-quotients") return mg::linear_quotients_order(ideal, limits).has_value();
    if (property == "vertex-splittable") return mg::is_vertex_splittable(ideal);
    if (property == "polymatroidal") return mg::is_polymatroidal(ideal);
    if (property == "componentwise-polymatroidal") return mg::is_componentwise_polymatroidal(ideal, limits);
    if (property == "stable") return mg::is_stable(ideal);
    if (property == "strongly-stable") return mg::is_strongly_stable(ideal);
    if (property == "complete-intersection") return mg::is_complete_intersection(ideal);
  } catch (const mg::DomainError& e) {
    std::cerr << "note: " << e.what() << '\n';
    return false;
  }
  throw mg::ParseError("unknown property " + property);
}

const std::vector<std::string> kProperties = {
    "linear-resolution", "differential-linear-resolution", "linear-quotients",
    "vertex-splittable", "polymatroidal", "componentwise-polymatroidal",
    "stable", "strongly-stable", "complete-intersection"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideals, gradients and their resolutions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool no_minimalize = false;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_flag("--no-minimalize", no_minimalize, "Echo raw generators before minimalizing");

  std::string file, engine_name = "auto";
  auto add_file = [&](CLI::App* cmd) { cmd->add_option("FILE", file, "Ideal document, - for stdin")->required(); };
  auto add_engine = [&](CLI::App* cmd) {
    cmd->add_option("--engine", engine_name, "auto, hochster, koszul or linear-quotients");
  };

  auto* stats = app.add_subcommand("stats", "Generator statistics");
  add_file(stats);

  int order = 1;
  auto* grad = app.add_subcommand("grad", "Iterated gradient ideal");
  add_file(grad);
  grad->add_option("--order", order, "Number of gradient steps")->check(CLI::NonNegativeNumber);

  bool quotient = false;
  auto* betti = app.add_subcommand("betti", "Graded Betti numbers");
  add_file(betti);
  add_engine(betti);
  betti->add_flag("--quotient", quotient, "Index as β_{i,j}(S/I)");

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  add_file(reg);
  add_engine(reg);

  std::string property;
  auto* check = app.add_subcommand("check", "Test a structural property");
  check->add_option("PROPERTY", property)->required()->check(CLI::IsMember(kProperties));
  add_file(check);
  add_engine(check);

  auto* family = app.add_subcommand("family", "Named ideal families");
  family->require_subcommand(1);
  int a_param = 0, d_param = 3;
  std::string part = "all";
  auto* thm22 = family->add_subcommand("thm22", "reg I - reg ∂(I) = a");
  thm22->add_option("--a", a_param)->required();
  auto* thm23 = family->add_subcommand("thm23", "overlapping windows of length d in 2d variables");
  thm23->add_option("--d", d_param)->required();
  for (auto* c : {thm22, thm23})
    c->add_option("--output", part, "all, ideal or gradient")->check(CLI::IsMember({"all", "ideal", "gradient"}));

  std::string graph_kind;
  auto* graph = app.add_subcommand("graph", "Edge and complementary edge ideals");
  graph->add_option("KIND", graph_kind)->required()->check(CLI::IsMember({"edge", "cedge"}));
  graph->add_option("GRAPHFILE", file)->required();

  std::string kk_mode, kk_a;
  int kk_d = 0, kk_n = 0;
  auto* kk = app.add_subcommand("kk", "Binomial expansions and shadows");
  kk->add_option("MODE", kk_mode)->required()->check(CLI::IsMember({"rep", "shadow", "closed", "oracle"}));
  kk->add_option("--a", kk_a);
  kk->add_option("--d", kk_d)->required();
  kk->add_option("--n", kk_n);

  std::string verify_id;
  std::vector<std::string> verify_params;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run a verification procedure");
  verify->add_option("ID", verify_id)->required()->check(CLI::IsMember(mg::theorem_ids()));
  verify->add_option("--param", verify_params, "key=value")->take_all();
  auto* seed_opt = verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto limits = mg::Limits::from_env();
    const mg::Engine engine = mg::parse_engine(engine_name);

    if (*stats) {
      const auto ideal = load_ideal(file, no_minimalize);
      Json out;
      out["n"] = ideal.n();
      out["mu"] = ideal.size();
      out["zero"] = ideal.is_zero();
      out["unit"] = ideal.is_unit();
      if (!ideal.is_zero()) {
        const auto st = mg::generator_stats(ideal);
        out["alpha"] = st.alpha;
        out["omega"] = st.omega;
        out["support"] = st.support;
      }
      out["squarefree"] = ideal.is_squarefree();
      out["equigenerated"] = ideal.is_equigenerated();
      if (json) {
        std::cout << out.dump() << '\n';
      } else {
        for (const auto& [k, v] : out.items()) std::cout << k << ": " << v.dump() << '\n';
      }
      return kOk;
    }

    if (*grad) {
      const auto ideal = load_ideal(file, no_minimalize);
      const auto g = mg::iterated_gradient(ideal, order);
      std::cout << (json ? mg::serialize_ideal(g) : g.to_string()) << '\n';
      return kOk;
    }

    if (*betti) {
      const auto ideal = load_ideal(file, no_minimalize);
      auto table = mg::betti_table(ideal, engine, limits);
      if (quotient) table = table.as(mg::BettiConvention::Quotient);
      if (json) {
        Json out = Json::array();
        for (const auto& [ij, v] : table.entries()) out.push_back({ij.first, ij.second, v});
        std::cout << out.dump() << '\n';
      } else {
        for (const auto& [ij, v] : table.entries())
          std::cout << "beta_{" << ij.first << "," << ij.second << "} = " << v << '\n';
      }
      return kOk;
    }

    if (*reg) {
      const auto ideal = load_ideal(file, no_minimalize);
      const auto r = mg::regularity_report(ideal, engine, limits);
      if (json) {
        Json out;
        out["regularity"] = r.value;
        out["engine"] = mg::to_string(r.engine);
        std::cout << out.dump() << '\n';
      } else {
        std::cout << r.value << '\n';
      }
      return kOk;
    }

    if (*check) {
      const auto ideal = load_ideal(file, no_minimalize);
      const bool holds = check_property(property, ideal, engine, limits);
      std::cout << (holds ? "true" : "false") << '\n';
      return holds ? kOk : kFalse;
    }

    if (*family) {
      Json out;
      mg::MonomialIdeal ideal;
      if (*thm22) {
        const auto f = mg::family_reg_gap(a_param);
        ideal = f.ideal;
        out["a"] = a_param;
        out["b"] = f.b;
        out["c"] = f.c;
        out["expected_reg"] = f.expected_reg;
        out["expected_reg_gradient"] = f.expected_reg_gradient;
      } else {
        ideal = mg::family_overlap_run(d_param);
        out["d"] = d_param;
        out["expected_reg"] = d_param;
        out["expected_reg_gradient"] = 2 * d_param - 3;
      }
      if (part == "ideal") {
        std::cout << mg::serialize_ideal(ideal) << '\n';
      } else if (part == "gradient") {
        std::cout << mg::serialize_ideal(mg::gradient(ideal)) << '\n';
      } else {
        out["ideal"] = ideal_json(ideal);
        out["gradient"] = ideal_json(mg::gradient(ideal));
        std::cout << out.dump() << '\n';
      }
      return kOk;
    }

    if (*graph) {
      const auto g = mg::parse_graph(read_input(file));
      if (g.edges().empty()) std::cerr << "warning: edgeless graph gives the zero ideal\n";
      const auto ideal = graph_kind == "edge" ? mg::edge_ideal(g) : mg::complementary_edge_ideal(g);
      std::cout << mg::serialize_ideal(ideal) << '\n';
      return kOk;
    }

    if (*kk) {
      Json out;
      if (kk_mode == "closed") {
        if (kk_n == 0) throw CLI::RequiredError("--n");
        const auto rep = mg::closed_form_count(kk_n, kk_d);
        out["threshold"] = mg::many_generators_threshold(kk_n, kk_d).get_str();
        out["expansion"] = rep.to_string();
        out["shadow"] = mg::closed_form_shadow(kk_n, kk_d).get_str();
      } else {
        if (kk_a.empty()) throw CLI::RequiredError("--a");
        const auto a = parse_big(kk_a);
        if (kk_mode == "rep") {
          const auto rep = mg::macaulay_rep(a, kk_d);
          out["expansion"] = rep.to_string();
          out["value"] = rep.value().get_str();
        } else if (kk_mode == "shadow") {
          out["shadow"] = mg::shadow_bound(a, kk_d).get_str();
        } else {
          out["shadow"] = mg::colex_shadow_oracle(a, kk_d, limits).get_str();
        }
      }
      if (json) {
        std::cout << out.dump() << '\n';
      } else {
        for (const auto& [k, v] : out.items()) std::cout << k << ": " << v.get<std::string>() << '\n';
      }
      return kOk;
    }

    if (*verify) {
      if (json && mg::is_randomized(verify_id) && seed_opt->count() == 0) {
        std::cerr << "error: --json on a randomized procedure needs --seed\n";
        return kUsage;
      }
      mg::Parameters params;
      for (const auto& kv : verify_params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
          std::cerr << "error: --param expects key=value, got " << kv << '\n';
          return kUsage;
        }
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      const auto report = mg::verify_theorem(verify_id, params, seed, limits);
      std::cout << (json ? report.to_json() + "\n" : report.to_text());
      return report.passed() ? kOk : kFalse;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const mg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
