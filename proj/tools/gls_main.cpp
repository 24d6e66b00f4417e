// Command-line front end: norms, operator application, bound tabulation,
// theorem verification, built-in fixtures, and randomized fuzzing.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gls/bounds.hpp"
#include "gls/harness.hpp"
#include "gls/instance.hpp"
#include "gls/norms.hpp"
#include "gls/operators.hpp"
#include "gls/parallel.hpp"

namespace {

using nlohmann::json;

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return gls::kInf;
  return std::stod(s);
}

std::vector<double> parse_r_grid(const std::string& spec) {
  // LO:HI:N, log-spaced
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("r-grid spec must be LO:HI:N");
  const double lo = std::stod(spec.substr(0, c1));
  const double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  const int n = std::stoi(spec.substr(c2 + 1));
  return gls::PGrid::log_spaced(lo, hi, n).points;
}

void print_vector_csv(const gls::GridFunction& f) {
  for (int i = 0; i < f.size(); ++i)
    std::printf("%s%s", i ? "," : "", gls::format_number(f.value(i)).c_str());
  std::printf("\n");
}

int cmd_norm(const std::string& instance_path, const std::string& function_label,
             const std::string& p_text) {
  const auto inst = gls::Instance::load(instance_path);
  const double v = gls::lp_norm(inst.function(function_label), parse_exponent(p_text));
  std::printf("%.12g\n", v);
  return 0;
}

int cmd_glsnorm(const std::string& instance_path, const std::string& function_label,
                const std::string& psi_text, int grid_n) {
  const auto inst = gls::Instance::load(instance_path);
  const auto psi = gls::generating_from_config(json::parse(psi_text), inst);
  gls::GlsNormOptions opts;
  if (grid_n > 0) opts.grid_points = grid_n;
  const auto res = gls::gls_norm(inst.function(function_label), psi, opts);
  if (res.growth_truncated)
    std::fprintf(stderr, "warning: ratio still rising at the grid cap; value is truncated\n");
  std::printf("%.12g\n", res.value);
  return 0;
}

int cmd_apply(const std::string& op, const std::string& instance_path, const std::string& g_label,
              const std::string& map_label, const std::string& kernel_label,
              const std::string& space_x_label) {
  const auto inst = gls::Instance::load(instance_path);
  const auto& g = inst.function(g_label);
  if (op == "nemytskii") {
    print_vector_csv(gls::nemytskii_apply(inst.map2(map_label), g));
  } else if (op == "urysohn") {
    print_vector_csv(gls::urysohn_apply(inst.map3(map_label), g, inst.space(space_x_label)));
  } else if (op == "hammerstein") {
    print_vector_csv(gls::hammerstein_apply(inst.kernel(kernel_label), inst.map2(map_label), g));
  } else {
    throw std::invalid_argument("unknown operator '" + op + "'");
  }
  return 0;
}

gls::Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  json doc;
  in >> doc;
  return gls::Scenario::from_json(doc);
}

int cmd_bound(const std::string& theorem, const std::string& scenario_path,
              const std::string& r_grid_spec) {
  auto sc = load_scenario(scenario_path);
  auto r_points = r_grid_spec.empty() ? sc.r_grid.points() : parse_r_grid(r_grid_spec);
  const auto& inst = sc.instance;
  gls::BoundTable table;
  if (theorem == "2.1") {
    table = gls::nemytskii_w(gls::generating_from_config(sc.psi_spec, inst),
                             gls::generating_from_config(sc.nu_spec, inst), sc.beta, r_points);
  } else if (theorem == "3.1") {
    table = gls::urysohn_theta(gls::generating_from_config(sc.psi_spec, inst),
                               inst.kernel(sc.roles.u0), sc.beta, r_points);
  } else if (theorem == "4.1") {
    const auto& h = inst.kernel(sc.roles.h);
    const auto& phi = inst.function(sc.roles.phi);
    const auto g_beta = gls::power_apply(inst.function(sc.roles.g), sc.beta);
    gls::UpsilonFactors raw;
    raw.kernel_factor = [&](double q, double r) {
      return gls::mixed_norm(h, q > gls::kExponentCap ? gls::kInf : q, r);
    };
    raw.phi_factor = [&](double s) {
      return gls::lp_norm(phi, s > gls::kExponentCap ? gls::kInf : s);
    };
    raw.g_beta_factor = [&](double t) {
      return gls::lp_norm(g_beta, t > gls::kExponentCap ? gls::kInf : t);
    };
    table = gls::hammerstein_delta(raw, r_points);
  } else {
    throw std::invalid_argument("unknown theorem '" + theorem + "'");
  }
  const bool has_t = !table.arg_t.empty();
  std::printf(has_t ? "r,bound,arg_p,arg_t,finite\n" : "r,bound,arg_p,finite\n");
  for (std::size_t i = 0; i < table.r.size(); ++i) {
    const bool fin = table.finite_at(i);
    std::printf("%s,%s,%s", gls::format_number(table.r[i]).c_str(),
                gls::format_number(table.value[i]).c_str(),
                fin ? gls::format_number(table.arg_p[i]).c_str() : "");
    if (has_t) std::printf(",%s", fin ? gls::format_number(table.arg_t[i]).c_str() : "");
    std::printf(",%d\n", fin ? 1 : 0);
  }
  return 0;
}

int cmd_verify(const std::string& theorem, const std::string& scenario_path, long seed,
               const std::string& out_dir, const std::string& format) {
  std::vector<gls::Scenario> scenarios;
  if (scenario_path.empty()) {
    for (auto& sc : gls::builtin_fixtures())
      if (theorem == "all" || sc.theorem == theorem) scenarios.push_back(std::move(sc));
  } else {
    scenarios.push_back(load_scenario(scenario_path));
  }
  if (seed >= 0)
    for (auto& sc : scenarios) sc.seed = static_cast<std::uint64_t>(seed);
  const auto result = gls::run_report(scenarios, theorem);
  if (!out_dir.empty()) {
    gls::write_report_files(result, out_dir);
    std::fprintf(stderr, "wrote %s/report.csv and %s/report.md\n", out_dir.c_str(),
                 out_dir.c_str());
  } else {
    std::fputs((format == "md" ? result.markdown : result.csv).c_str(), stdout);
  }
  return result.all_pass ? 0 : 1;
}

int cmd_example(const std::string& which, const std::string& dump_path) {
  gls::Scenario sc;
  if (which == "2.1")
    sc = gls::example_2_1_scenario();
  else if (which == "3.1-remark")
    sc = gls::remark_3_1_scenario();
  else if (which == "4.1-ones")
    sc = gls::all_ones_4_1_scenario();
  else
    throw std::invalid_argument("unknown example '" + which + "' (try 2.1, 3.1-remark, 4.1-ones)");
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw std::runtime_error("cannot write " + dump_path);
    out << sc.to_json().dump(2) << "\n";
    std::fprintf(stderr, "wrote scenario to %s\n", dump_path.c_str());
  }
  bool pass = true;
  for (const auto& rep : gls::verify_scenario(sc)) {
    std::printf("%s theorem %s%s%s: lhs_gls=%.12g rhs_gls=%.12g margin=%.3g -> %s\n",
                rep.scenario.c_str(), rep.theorem.c_str(), rep.mode == "-" ? "" : " mode ",
                rep.mode == "-" ? "" : rep.mode.c_str(), rep.lhs_gls, rep.rhs_gls,
                rep.gls_margin, rep.all_pass ? "pass" : "FAIL");
    pass = pass && rep.all_pass;
  }
  return pass ? 0 : 1;
}

int cmd_fuzz(int count, long seed, const std::string& theorem) {
  const char* cycle[] = {"2.1", "3.1", "4.1"};
  struct Row {
    std::string label;
    double min_margin = 0.0;
    bool pass = false;
  };
  std::vector<Row> rows(static_cast<std::size_t>(count));
  gls::parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
    const std::string t = theorem == "all" ? cycle[i % 3] : theorem;
    const auto sc =
        gls::random_instance(static_cast<std::uint64_t>(seed) + i, t);
    double min_margin = gls::kInf;
    bool pass = true;
    for (const auto& rep : gls::verify_scenario(sc)) {
      min_margin = std::min(min_margin, rep.min_norm_margin);
      pass = pass && rep.all_pass;
    }
    rows[i] = {sc.label, min_margin, pass};
  });
  int failures = 0;
  for (const auto& row : rows) {
    if (!row.pass) ++failures;
    std::printf("%s,min_norm_margin=%s,%s\n", row.label.c_str(),
                gls::format_number(row.min_margin).c_str(), row.pass ? "pass" : "FAIL");
  }
  std::printf("fuzz: %d/%d passed\n", count - failures, count);
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grand Lebesgue Space norms, nonlinear operators, and bound verification"};
  app.require_subcommand(1);

  std::string instance_path, function_label, p_text = "2", psi_text, op, g_label, map_label,
              kernel_label, space_x = "X", theorem = "all", scenario_path, out_dir,
              format = "csv", r_grid_spec, example_name, dump_path;
  int grid_n = 0, fuzz_count = 20;
  long seed = -1;

  auto* norm = app.add_subcommand("norm", "Lebesgue-Riesz norm of a function");
  norm->add_option("--instance", instance_path)->required();
  norm->add_option("--function", function_label)->required();
  norm->add_option("--p", p_text)->required();

  auto* glsnorm = app.add_subcommand("glsnorm", "GLS norm against a generating-function spec");
  glsnorm->add_option("--instance", instance_path)->required();
  glsnorm->add_option("--function", function_label)->required();
  glsnorm->add_option("--psi", psi_text, "inline JSON generating-function spec")->required();
  glsnorm->add_option("--grid", grid_n, "scan grid size");

  auto* apply = app.add_subcommand("apply", "apply a nonlinear operator");
  apply->add_option("--op", op, "nemytskii|urysohn|hammerstein")->required();
  apply->add_option("--instance", instance_path)->required();
  apply->add_option("--g", g_label)->required();
  apply->add_option("--map", map_label);
  apply->add_option("--kernel", kernel_label);
  apply->add_option("--space-x", space_x, "X space label for urysohn");

  auto* bound = app.add_subcommand("bound", "tabulate a bound generating function");
  bound->add_option("--theorem", theorem)->required();
  bound->add_option("--scenario", scenario_path)->required();
  bound->add_option("--r-grid", r_grid_spec, "LO:HI:N override");

  auto* verify = app.add_subcommand("verify", "verify theorem inequalities");
  verify->add_option("--theorem", theorem, "2.1|3.1|4.1|all");
  verify->add_option("--scenario", scenario_path, "scenario file (default: built-in fixtures)");
  verify->add_option("--seed", seed);
  verify->add_option("--out", out_dir, "write report.csv/report.md here");
  verify->add_option("--format", format, "csv|md (stdout format)");

  auto* example = app.add_subcommand("example", "run a built-in fixture");
  example->add_option("name", example_name, "2.1|3.1-remark|4.1-ones")->required();
  example->add_option("--dump", dump_path, "also write the scenario json here");

  auto* fuzz = app.add_subcommand("fuzz", "verify randomized scenarios");
  fuzz->add_option("--count", fuzz_count);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--theorem", theorem, "2.1|3.1|4.1|all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (norm->parsed()) return cmd_norm(instance_path, function_label, p_text);
    if (glsnorm->parsed()) return cmd_glsnorm(instance_path, function_label, psi_text, grid_n);
    if (apply->parsed())
      return cmd_apply(op, instance_path, g_label, map_label, kernel_label, space_x);
    if (bound->parsed()) return cmd_bound(theorem, scenario_path, r_grid_spec);
    if (verify->parsed()) return cmd_verify(theorem, scenario_path, seed, out_dir, format);
    if (example->parsed()) return cmd_example(example_name, dump_path);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_count, seed < 0 ? 1 : seed, theorem);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
