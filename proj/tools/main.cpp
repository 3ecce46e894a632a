#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gstrata/deform.hpp"
#include "gstrata/equations.hpp"
#include "gstrata/staircase.hpp"
#include "gstrata/verify.hpp"
#include "json.hpp"

namespace {

using namespace gstrata;

// Accepts the set inline as JSON or as a path to a JSON file.
StandardSet parse_delta(const std::string& spec) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(spec);
  } catch (const nlohmann::json::parse_error&) {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open delta file: " + spec);
    in >> j;
  }
  return StandardSet::from_json(j);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text << "\n";
}

int cmd_staircase(const std::string& delta_spec, const std::string& out_path) {
  StandardSet d = parse_delta(delta_spec);
  nlohmann::json j;
  j["delta"] = d.to_json();
  j["corners"] = d.corners();
  j["border"] = d.border();
  j["border2"] = d.iterated_border(2);
  j["edge_points"] = d.edge_points();
  j["counts"] = {{"elements", d.size()},
                 {"corners", d.corners().size()},
                 {"border", d.border().size()},
                 {"border2", d.iterated_border(2).size()},
                 {"edge_points", d.edge_points().size()}};
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_equations(const std::string& delta_spec, const std::string& order_spec,
                  const std::string& vars, const std::string& which,
                  const std::string& format, const std::string& out_path) {
  StandardSet d = parse_delta(delta_spec);
  TermOrder order = TermOrder::parse(
      order_spec.empty() ? "lex" : order_spec, d.n(), vars);
  auto build = [&]() -> EquationSet {
    if (which == "full") return gen_full(d, d);
    if (which == "fewer") return gen_fewer(d);
    if (which == "stratum") return gen_stratum(d, d, order);
    if (which == "minimal") return gen_minimal(d, order);
    if (which == "universal")
      return order_spec.empty() ? gen_universal(d, d, false)
                                : gen_universal(d, d, true, &order);
    if (which == "homog")
      return gen_homogeneous_restriction(d,
                                         build_deformation(d, order).ell);
    throw std::invalid_argument("unknown mode: " + which);
  };
  EquationSet es = build();
  emit(format == "cas" ? es.to_cas() : es.to_json().dump(2), out_path);
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, int max_r,
               unsigned long seed, const std::string& out_path) {
  SuiteReport rep = run_suite(suite, max_n, max_r, seed);
  emit(rep.to_json().dump(2), out_path);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"staircase schemes: equations, charts, degenerations"};
  app.require_subcommand(1);

  std::string delta_spec, order_spec, vars, which = "full", format = "json",
              out_path, suite;
  int max_n = 3, max_r = 6;
  unsigned long seed = 0;

  CLI::App* sc = app.add_subcommand("staircase", "staircase combinatorics");
  sc->add_option("--delta", delta_spec, "standard set, inline JSON or file")
      ->required();
  sc->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* eq = app.add_subcommand("equations", "defining equations");
  eq->add_option("--delta", delta_spec, "standard set, inline JSON or file")
      ->required();
  eq->add_option("--order", order_spec, "term order (lex default)");
  eq->add_option("--vars", vars, "variable priority, 1-based, most significant first");
  eq->add_option("--which", which,
                 "full|fewer|stratum|minimal|universal|homog");
  eq->add_option("--export", format, "json|cas");
  eq->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* vf = app.add_subcommand("verify", "verification suites");
  vf->add_option("--suite", suite, "golden|fewer|gluing|deform|strata")
      ->required();
  vf->add_option("--max-n", max_n, "catalog dimension bound");
  vf->add_option("--max-r", max_r, "catalog length bound");
  vf->add_option("--seed", seed, "base seed for random cases");
  vf->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc->parsed()) return cmd_staircase(delta_spec, out_path);
    if (eq->parsed())
      return cmd_equations(delta_spec, order_spec, vars, which, format,
                           out_path);
    return cmd_verify(suite, max_n, max_r, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
