#include "gls/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gls/norms.hpp"
#include "gls/rng.hpp"

namespace gls {

using nlohmann::json;

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> RGridSpec::points() const {
  return PGrid::log_spaced(lo, hi, n).points;
}

namespace {

json roles_to_json(const Roles& r) {
  return json{{"g", r.g}, {"phi", r.phi}, {"n", r.n}, {"u", r.u}, {"u0", r.u0}, {"h", r.h}};
}

Roles roles_from_json(const json& j) {
  Roles r;
  r.g = j.value("g", "");
  r.phi = j.value("phi", "");
  r.n = j.value("n", "");
  r.u = j.value("u", "");
  r.u0 = j.value("u0", "");
  r.h = j.value("h", "");
  return r;
}

double norm_margin(double margin, double bound, const Tolerances& tol) {
  if (!std::isfinite(bound) || !std::isfinite(margin)) return kInf;
  return margin / (tol.abs + tol.rel * std::max(bound, 0.0));
}

struct GlsLevel {
  double lhs = 0.0;
  double arg = 0.0;
};

// GLS norm of f against a tabulated bound: evaluated at the table's own
// nodes, which are exact where the infima were computed.
GlsLevel gls_over_table(const GridFunction& f, const BoundTable& table) {
  if (table.finite_count() >= 2) {
    auto res = gls_norm(f, table.to_generating_function());
    return {res.value, res.arg_p};
  }
  GlsLevel out;
  for (std::size_t i = 0; i < table.r.size(); ++i) {
    if (!table.finite_at(i)) continue;
    const double ratio = lp_norm(f, table.r[i]) / table.value[i];
    if (ratio > out.lhs) {
      out.lhs = ratio;
      out.arg = table.r[i];
    }
  }
  return out;
}

void finish_report(BoundReport& rep, const Tolerances& tol) {
  rep.min_norm_margin = norm_margin(rep.gls_margin, rep.rhs_gls, tol);
  for (const auto& row : rep.rows)
    rep.min_norm_margin = std::min(rep.min_norm_margin, norm_margin(row.margin, row.bound, tol));
  rep.all_pass = !rep.precondition_failed && rep.min_norm_margin >= -1.0;
}

} // namespace

Scenario Scenario::from_json(const json& doc) {
  Scenario sc;
  sc.label = doc.value("label", "scenario");
  sc.theorem = doc.value("theorem", "");
  sc.instance = Instance::from_json(doc.at("instance"));
  sc.roles = roles_from_json(doc.value("roles", json::object()));
  sc.beta = doc.value("beta", 1.0);
  sc.psi_spec = doc.value("psi", json());
  sc.nu_spec = doc.value("nu", json());
  sc.tau_spec = doc.value("tau", json());
  if (doc.contains("r_grid")) {
    sc.r_grid.lo = doc["r_grid"].value("lo", 1.05);
    sc.r_grid.hi = doc["r_grid"].value("hi", 8.0);
    sc.r_grid.n = doc["r_grid"].value("n", 16);
  }
  if (doc.contains("tolerances")) {
    sc.tol.abs = doc["tolerances"].value("abs", 1e-12);
    sc.tol.rel = doc["tolerances"].value("rel", 1e-9);
  }
  sc.seed = doc.value("seed", std::uint64_t{0});
  sc.example_2_1 = doc.value("flags", json::object()).value("example_2_1", false);
  return sc;
}

json Scenario::to_json() const {
  return json{{"label", label},
              {"theorem", theorem},
              {"instance", instance.raw()},
              {"roles", roles_to_json(roles)},
              {"beta", beta},
              {"psi", psi_spec},
              {"nu", nu_spec},
              {"tau", tau_spec},
              {"r_grid", json{{"lo", r_grid.lo}, {"hi", r_grid.hi}, {"n", r_grid.n}}},
              {"tolerances", json{{"abs", tol.abs}, {"rel", tol.rel}}},
              {"seed", seed},
              {"flags", json{{"example_2_1", example_2_1}}}};
}

void Scenario::validate() const {
  if (!(beta > 0.0)) throw std::invalid_argument("scenario '" + label + "': beta must be positive");
  if (!example_2_1 && beta < 1.0)
    throw std::invalid_argument("scenario '" + label +
                                "': beta < 1 requires the example_2_1 flag");
  auto need_function = [&](const std::string& lbl, const char* role) {
    if (!lbl.empty() && !instance.has_function(lbl))
      throw std::invalid_argument("scenario '" + label + "': role " + role +
                                  " references unknown function '" + lbl + "'");
  };
  need_function(roles.g, "g");
  need_function(roles.phi, "phi");
  if (!roles.n.empty() && !instance.has_map2(roles.n))
    throw std::invalid_argument("scenario '" + label + "': unknown map '" + roles.n + "'");
  if (!roles.u.empty() && !instance.has_map3(roles.u))
    throw std::invalid_argument("scenario '" + label + "': unknown map '" + roles.u + "'");
  if (!roles.u0.empty() && !instance.has_kernel(roles.u0))
    throw std::invalid_argument("scenario '" + label + "': unknown kernel '" + roles.u0 + "'");
  if (!roles.h.empty() && !instance.has_kernel(roles.h))
    throw std::invalid_argument("scenario '" + label + "': unknown kernel '" + roles.h + "'");
}

BoundReport verify_nemytskii(const Scenario& sc) {
  sc.validate();
  BoundReport rep;
  rep.scenario = sc.label;
  rep.theorem = "2.1";

  const GridFunction& g = sc.instance.function(sc.roles.g);
  const GridFunction& phi = sc.instance.function(sc.roles.phi);
  const ScalarMap2& n = sc.instance.map2(sc.roles.n);
  const GeneratingFunction psi = generating_from_config(sc.psi_spec, sc.instance);
  const GeneratingFunction nu = generating_from_config(sc.nu_spec, sc.instance);

  FactorizationWitness witness;
  witness.beta = sc.beta;
  witness.phi = phi;
  witness.z_grid = make_z_grid(g);
  witness = check_factorization(n, std::move(witness));
  rep.precondition_failed = !witness.certified();

  rep.c1 = gls_norm(g, psi).value;
  rep.c2 = gls_norm(phi, nu).value;
  const double factor = rep.c2 * std::pow(rep.c1, sc.beta);

  const auto table = nemytskii_w(psi, nu, sc.beta, sc.r_grid.points());
  const GridFunction f = nemytskii_apply(n, g);

  for (std::size_t i = 0; i < table.r.size(); ++i) {
    BoundRow row;
    row.r = table.r[i];
    row.lhs = lp_norm(f, row.r);
    row.finite = table.finite_at(i);
    if (row.finite) {
      row.bound = factor * table.value[i];
      row.margin = row.bound - row.lhs;
      row.arg_p = table.arg_p[i];
    }
    rep.rows.push_back(row);
  }

  const auto lvl = gls_over_table(f, table);
  rep.lhs_gls = lvl.lhs;
  rep.rhs_gls = factor;
  rep.gls_margin = rep.rhs_gls - rep.lhs_gls;
  finish_report(rep, sc.tol);
  return rep;
}

BoundReport verify_urysohn(const Scenario& sc) {
  sc.validate();
  BoundReport rep;
  rep.scenario = sc.label;
  rep.theorem = "3.1";

  const GridFunction& g = sc.instance.function(sc.roles.g);
  const ScalarMap3& u = sc.instance.map3(sc.roles.u);
  const Kernel2& u0 = sc.instance.kernel(sc.roles.u0);
  const GeneratingFunction psi = generating_from_config(sc.psi_spec, sc.instance);

  FactorizationWitness witness;
  witness.beta = sc.beta;
  witness.u0 = u0;
  witness.z_grid = make_z_grid(g);
  witness = check_factorization(u, std::move(witness));
  rep.precondition_failed = !witness.certified();

  rep.c1 = gls_norm(g, psi).value;
  rep.c2 = 1.0;
  const double factor = std::pow(rep.c1, sc.beta);

  const auto table = urysohn_theta(psi, u0, sc.beta, sc.r_grid.points());
  const GridFunction ug = urysohn_apply(u, g, u0.space_x_ptr());

  for (std::size_t i = 0; i < table.r.size(); ++i) {
    BoundRow row;
    row.r = table.r[i];
    row.lhs = lp_norm(ug, row.r);
    row.finite = table.finite_at(i);
    if (row.finite) {
      row.bound = factor * table.value[i];
      row.margin = row.bound - row.lhs;
      row.arg_p = table.arg_p[i];
    }
    rep.rows.push_back(row);
  }

  const auto lvl = gls_over_table(ug, table);
  rep.lhs_gls = lvl.lhs;
  rep.rhs_gls = factor;
  rep.gls_margin = rep.rhs_gls - rep.lhs_gls;
  finish_report(rep, sc.tol);
  return rep;
}

namespace {

// Exponents below 1 count as outside every support (arises only under the
// relaxed beta of the exactness experiments).
double eval_pow_capped(const GeneratingFunction& gen, double x, double beta) {
  if (x < 1.0) return kInf;
  return std::pow(gen.eval_capped(x), beta);
}

} // namespace

std::vector<BoundReport> verify_hammerstein(const Scenario& sc) {
  sc.validate();
  const GridFunction& g = sc.instance.function(sc.roles.g);
  const GridFunction& phi = sc.instance.function(sc.roles.phi);
  const ScalarMap2& n = sc.instance.map2(sc.roles.n);
  const Kernel2& h = sc.instance.kernel(sc.roles.h);
  const GeneratingFunction psi = generating_from_config(sc.psi_spec, sc.instance);
  const GeneratingFunction nu = generating_from_config(sc.nu_spec, sc.instance);
  const GeneratingFunction2 tau = generating2_from_config(sc.tau_spec, sc.instance);

  FactorizationWitness witness;
  witness.beta = sc.beta;
  witness.phi = phi;
  witness.z_grid = make_z_grid(g);
  witness = check_factorization(n, std::move(witness));
  const bool pre_failed = !witness.certified();

  const GridFunction hg = hammerstein_apply(h, n, g);
  const GridFunction g_beta = power_apply(g, sc.beta);

  UpsilonFactors raw;
  raw.kernel_factor = [&](double q, double r) {
    return mixed_norm(h, q > kExponentCap ? kInf : q, r);
  };
  raw.phi_factor = [&](double s) { return lp_norm(phi, s > kExponentCap ? kInf : s); };
  raw.g_beta_factor = [&](double t) { return lp_norm(g_beta, t > kExponentCap ? kInf : t); };

  const double c_tau = gls_norm_2d(h, tau).value;
  const double c_nu = gls_norm(phi, nu).value;
  const double c_psi = gls_norm(g, psi).value;
  UpsilonFactors maj;
  maj.kernel_factor = [&, c_tau](double q, double r) { return c_tau * tau.eval_capped(q, r); };
  maj.phi_factor = [&, c_nu](double s) { return c_nu * nu.eval_capped(s); };
  maj.g_beta_factor = [&, c_psi](double t) {
    return std::pow(c_psi, sc.beta) * eval_pow_capped(psi, sc.beta * t, sc.beta);
  };

  std::vector<BoundReport> reports;
  const auto r_points = sc.r_grid.points();
  for (const auto& [mode, factors] : {std::pair<const char*, const UpsilonFactors&>{"raw", raw},
                                      {"gls-majorant", maj}}) {
    BoundReport rep;
    rep.scenario = sc.label;
    rep.theorem = "4.1";
    rep.mode = mode;
    rep.precondition_failed = pre_failed;
    rep.c1 = c_psi;
    rep.c2 = c_nu;

    const auto table = hammerstein_delta(factors, r_points);
    for (std::size_t i = 0; i < table.r.size(); ++i) {
      BoundRow row;
      row.r = table.r[i];
      row.lhs = lp_norm(hg, row.r);
      row.finite = table.finite_at(i);
      if (row.finite) {
        row.bound = table.value[i];
        row.margin = row.bound - row.lhs;
        row.arg_p = table.arg_p[i];
        row.arg_t = table.arg_t[i];
        row.has_arg_t = true;
      }
      rep.rows.push_back(row);
    }

    const auto lvl = gls_over_table(hg, table);
    rep.lhs_gls = lvl.lhs;
    rep.rhs_gls = 1.0;
    rep.gls_margin = rep.rhs_gls - rep.lhs_gls;
    finish_report(rep, sc.tol);
    reports.push_back(std::move(rep));
  }
  return reports;
}

namespace {

bool supports_theorem(const Scenario& sc, const std::string& theorem) {
  if (theorem == "2.1")
    return !sc.roles.g.empty() && !sc.roles.phi.empty() && !sc.roles.n.empty() &&
           !sc.psi_spec.is_null() && !sc.nu_spec.is_null();
  if (theorem == "3.1")
    return !sc.roles.g.empty() && !sc.roles.u.empty() && !sc.roles.u0.empty() &&
           !sc.psi_spec.is_null();
  if (theorem == "4.1")
    return !sc.roles.g.empty() && !sc.roles.phi.empty() && !sc.roles.n.empty() &&
           !sc.roles.h.empty() && !sc.psi_spec.is_null() && !sc.nu_spec.is_null() &&
           !sc.tau_spec.is_null();
  return false;
}

} // namespace

std::vector<BoundReport> verify_scenario(const Scenario& sc, const std::string& theorem) {
  std::string which = theorem.empty() ? sc.theorem : theorem;
  std::vector<BoundReport> out;
  if (which == "all") {
    for (const char* t : {"2.1", "3.1", "4.1"})
      if (supports_theorem(sc, t)) {
        auto sub = verify_scenario(sc, t);
        out.insert(out.end(), sub.begin(), sub.end());
      }
    if (out.empty())
      throw std::invalid_argument("scenario '" + sc.label +
                                  "' carries no complete role set for any theorem");
    return out;
  }
  if (which == "2.1") {
    out.push_back(verify_nemytskii(sc));
  } else if (which == "3.1") {
    out.push_back(verify_urysohn(sc));
  } else if (which == "4.1") {
    out = verify_hammerstein(sc);
  } else {
    throw std::invalid_argument("unknown theorem '" + which + "'");
  }
  return out;
}

namespace {

json gen_spec_variant(Rng& rng, const std::string& natural_label) {
  switch (rng.uniform_int(0, 2)) {
    case 0:
      return json{{"kind", "natural"}, {"function", natural_label}};
    case 1:
      return json{{"kind", "constant"}, {"value", rng.uniform(0.5, 2.0)}};
    default:
      return json{{"kind", "power"},
                  {"scale", rng.uniform(0.5, 2.0)},
                  {"gamma", rng.uniform(0.1, 0.5)}};
  }
}

std::vector<double> rand_weights(Rng& rng, int count, bool normalize) {
  std::vector<double> w(static_cast<std::size_t>(count));
  double sum = 0.0;
  for (auto& x : w) {
    x = rng.uniform(0.1, 1.0);
    sum += x;
  }
  if (normalize)
    for (auto& x : w) x /= sum;
  return w;
}

std::vector<double> rand_values(Rng& rng, int count, const RandomInstanceOptions& opts) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (auto& x : v) x = rng.uniform(opts.value_lo, opts.value_hi);
  return v;
}

json rand_matrix(Rng& rng, int rows, int cols, const RandomInstanceOptions& opts) {
  json m = json::array();
  for (int i = 0; i < rows; ++i) {
    json row = json::array();
    for (int j = 0; j < cols; ++j) row.push_back(rng.uniform(opts.value_lo, opts.value_hi));
    m.push_back(row);
  }
  return m;
}

} // namespace

Scenario random_instance(std::uint64_t seed, const std::string& theorem,
                         const RandomInstanceOptions& opts) {
  Rng rng(seed);
  const int nx = rng.uniform_int(2, opts.max_atoms);
  const int ny = rng.uniform_int(2, opts.max_atoms);
  const double beta = rng.uniform(1.0, 3.0);

  json doc;
  Scenario sc;
  sc.theorem = theorem;
  sc.beta = beta;
  sc.seed = seed;
  sc.label = "random-" + theorem + "-" + std::to_string(seed);
  sc.r_grid.lo = rng.uniform(1.05, 1.3);
  sc.r_grid.hi = rng.uniform(4.0, 7.0);
  sc.r_grid.n = 8 + rng.uniform_int(0, 4);

  if (theorem == "2.1") {
    doc["spaces"] = json::array({json{{"label", "X"}, {"weights", rand_weights(rng, nx, opts.normalize)}}});
    doc["functions"] = json::array(
        {json{{"label", "g"}, {"space", "X"}, {"values", rand_values(rng, nx, opts)}},
         json{{"label", "phi"}, {"space", "X"}, {"values", rand_values(rng, nx, opts)}}});
    doc["kernels"] = json::array();
    doc["maps"] = json::array({json{
        {"label", "n"}, {"kind", "product_power"}, {"params", json{{"phi", "phi"}, {"beta", beta}}}}});
    sc.roles.g = "g";
    sc.roles.phi = "phi";
    sc.roles.n = "n";
    sc.psi_spec = gen_spec_variant(rng, "g");
    sc.nu_spec = gen_spec_variant(rng, "phi");
  } else if (theorem == "3.1") {
    doc["spaces"] = json::array(
        {json{{"label", "X"}, {"weights", rand_weights(rng, nx, opts.normalize)}},
         json{{"label", "Y"}, {"weights", rand_weights(rng, ny, opts.normalize)}}});
    doc["functions"] = json::array(
        {json{{"label", "g"}, {"space", "Y"}, {"values", rand_values(rng, ny, opts)}}});
    doc["kernels"] = json::array({json{{"label", "u0"},
                                       {"space_x", "X"},
                                       {"space_y", "Y"},
                                       {"entries", rand_matrix(rng, nx, ny, opts)}}});
    doc["maps"] = json::array({json{
        {"label", "u"}, {"kind", "kernel_power"}, {"params", json{{"u0", "u0"}, {"beta", beta}}}}});
    sc.roles.g = "g";
    sc.roles.u = "u";
    sc.roles.u0 = "u0";
    sc.psi_spec = gen_spec_variant(rng, "g");
  } else if (theorem == "4.1") {
    doc["spaces"] = json::array(
        {json{{"label", "X"}, {"weights", rand_weights(rng, nx, opts.normalize)}},
         json{{"label", "Y"}, {"weights", rand_weights(rng, ny, opts.normalize)}}});
    doc["functions"] = json::array(
        {json{{"label", "g"}, {"space", "Y"}, {"values", rand_values(rng, ny, opts)}},
         json{{"label", "phi"}, {"space", "Y"}, {"values", rand_values(rng, ny, opts)}}});
    doc["kernels"] = json::array({json{{"label", "h"},
                                       {"space_x", "X"},
                                       {"space_y", "Y"},
                                       {"entries", rand_matrix(rng, nx, ny, opts)}}});
    doc["maps"] = json::array({json{
        {"label", "n"}, {"kind", "product_power"}, {"params", json{{"phi", "phi"}, {"beta", beta}}}}});
    sc.roles.g = "g";
    sc.roles.phi = "phi";
    sc.roles.n = "n";
    sc.roles.h = "h";
    sc.psi_spec = gen_spec_variant(rng, "g");
    sc.nu_spec = gen_spec_variant(rng, "phi");
    sc.tau_spec = rng.uniform_int(0, 1) == 0
                      ? json{{"kind", "natural2"}, {"kernel", "h"}}
                      : json{{"kind", "constant"}, {"value", rng.uniform(0.5, 2.0)}};
  } else {
    throw std::invalid_argument("random_instance: unknown theorem '" + theorem + "'");
  }
  sc.instance = Instance::from_json(doc);
  return sc;
}

Scenario example_2_1_scenario() {
  json doc;
  doc["spaces"] = json::array({json{{"label", "X"}, {"weights", {0.375, 0.25, 0.25, 0.125}}}});
  doc["functions"] = json::array(
      {json{{"label", "g"}, {"space", "X"}, {"values", {0.8, 1.6, 2.4, 1.1}}},
       json{{"label", "phi"}, {"space", "X"}, {"values", {1.0, 1.0, 1.0, 1.0}}}});
  doc["kernels"] = json::array();
  doc["maps"] = json::array(
      {json{{"label", "n"}, {"kind", "power"}, {"params", json{{"c", 1.0}, {"beta", 2.5}}}}});
  Scenario sc;
  sc.label = "example-2.1";
  sc.theorem = "2.1";
  sc.instance = Instance::from_json(doc);
  sc.roles.g = "g";
  sc.roles.phi = "phi";
  sc.roles.n = "n";
  sc.beta = 2.5;
  sc.psi_spec = json{{"kind", "natural"}, {"function", "g"}};
  sc.nu_spec = json{{"kind", "constant"}, {"value", 1.0}};
  sc.r_grid = RGridSpec{1.0, 6.0, 24};
  sc.seed = 7;
  sc.example_2_1 = true;
  return sc;
}

Scenario remark_3_1_scenario() {
  json doc;
  doc["spaces"] = json::array(
      {json{{"label", "X"}, {"weights", {0.5, 0.25, 0.25}}},
       json{{"label", "Y"}, {"weights", {0.25, 0.25, 0.5}}}});
  doc["functions"] = json::array(
      {json{{"label", "g"}, {"space", "Y"}, {"values", {2.0, 2.0, 2.0}}}});
  doc["kernels"] = json::array({json{{"label", "u0"},
                                     {"space_x", "X"},
                                     {"space_y", "Y"},
                                     {"entries", {{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}}}}});
  doc["maps"] = json::array(
      {json{{"label", "u"}, {"kind", "kernel_power"}, {"params", json{{"u0", "u0"}, {"beta", 3.0}}}}});
  Scenario sc;
  sc.label = "remark-3.1";
  sc.theorem = "3.1";
  sc.instance = Instance::from_json(doc);
  sc.roles.g = "g";
  sc.roles.u = "u";
  sc.roles.u0 = "u0";
  sc.beta = 3.0;
  sc.psi_spec = json{{"kind", "constant"}, {"value", 1.0}};
  sc.r_grid = RGridSpec{1.1, 6.0, 16};
  sc.seed = 7;
  return sc;
}

Scenario all_ones_4_1_scenario() {
  json doc;
  doc["spaces"] = json::array(
      {json{{"label", "X"}, {"weights", {0.5, 0.5}}},
       json{{"label", "Y"}, {"weights", {0.25, 0.25, 0.25, 0.25}}}});
  doc["functions"] = json::array(
      {json{{"label", "g"}, {"space", "Y"}, {"values", {1.0, 1.0, 1.0, 1.0}}},
       json{{"label", "phi"}, {"space", "Y"}, {"values", {1.0, 1.0, 1.0, 1.0}}}});
  doc["kernels"] = json::array({json{{"label", "h"},
                                     {"space_x", "X"},
                                     {"space_y", "Y"},
                                     {"entries", {{1.0, 1.0, 1.0, 1.0}, {1.0, 1.0, 1.0, 1.0}}}}});
  doc["maps"] = json::array(
      {json{{"label", "n"}, {"kind", "power"}, {"params", json{{"c", 1.0}, {"beta", 2.0}}}}});
  Scenario sc;
  sc.label = "all-ones-4.1";
  sc.theorem = "4.1";
  sc.instance = Instance::from_json(doc);
  sc.roles.g = "g";
  sc.roles.phi = "phi";
  sc.roles.n = "n";
  sc.roles.h = "h";
  sc.beta = 2.0;
  sc.psi_spec = json{{"kind", "natural"}, {"function", "g"}};
  sc.nu_spec = json{{"kind", "natural"}, {"function", "phi"}};
  sc.tau_spec = json{{"kind", "natural2"}, {"kernel", "h"}};
  sc.r_grid = RGridSpec{1.1, 6.0, 12};
  sc.seed = 7;
  return sc;
}

std::vector<Scenario> builtin_fixtures() {
  return {example_2_1_scenario(), remark_3_1_scenario(), all_ones_4_1_scenario()};
}

RunResult run_report(const std::vector<Scenario>& scenarios, const std::string& theorem) {
  RunResult result;
  for (const auto& sc : scenarios) {
    const std::string which =
        (theorem == "all" && !sc.theorem.empty()) ? sc.theorem : theorem;
    auto reports = verify_scenario(sc, which);
    for (auto& rep : reports) {
      result.all_pass = result.all_pass && rep.all_pass;
      result.reports.push_back(std::move(rep));
    }
  }

  std::ostringstream csv;
  csv << "scenario,theorem,mode,r,lhs_norm,bound_value,margin,arg_p,arg_t,finite\n";
  for (const auto& rep : result.reports) {
    for (const auto& row : rep.rows) {
      csv << rep.scenario << ',' << rep.theorem << ',' << rep.mode << ','
          << format_number(row.r) << ',' << format_number(row.lhs) << ','
          << format_number(row.bound) << ',' << format_number(row.margin) << ','
          << (row.finite ? format_number(row.arg_p) : std::string()) << ','
          << (row.has_arg_t && row.finite ? format_number(row.arg_t) : std::string()) << ','
          << (row.finite ? 1 : 0) << '\n';
    }
  }
  result.csv = csv.str();

  std::ostringstream md;
  md << "# Verification report\n\n";
  md << "| scenario | theorem | mode | lhs_gls | rhs_gls | margin | min_norm_margin | pass |\n";
  md << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& rep : result.reports) {
    md << "| " << rep.scenario << " | " << rep.theorem << " | " << rep.mode << " | "
       << format_number(rep.lhs_gls) << " | " << format_number(rep.rhs_gls) << " | "
       << format_number(rep.gls_margin) << " | " << format_number(rep.min_norm_margin) << " | "
       << (rep.all_pass ? "yes" : (rep.precondition_failed ? "precondition-failed" : "NO"))
       << " |\n";
  }
  result.markdown = md.str();
  return result;
}

void write_report_files(const RunResult& result, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + out_dir);
  for (const auto& [name, text] :
       {std::pair<const char*, const std::string&>{"report.csv", result.csv},
        {"report.md", result.markdown}}) {
    const std::string path = out_dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report file: " + path);
    out << text;
  }
}

} // namespace gls
