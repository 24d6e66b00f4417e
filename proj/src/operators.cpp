#include "gls/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gls {

namespace {

double eval_or_report(const ScalarMap2& n, int x, double z) {
  double v;
  try {
    v = n(x, z);
  } catch (const std::exception& e) {
    throw std::runtime_error("scalar map '" + n.label() + "' failed at atom " +
                             std::to_string(x) + ": " + e.what());
  }
  if (!std::isfinite(v))
    throw std::runtime_error("scalar map '" + n.label() + "' returned a non-finite value at atom " +
                             std::to_string(x));
  return v;
}

double eval_or_report(const ScalarMap3& u, int x, int y, double z) {
  double v;
  try {
    v = u(x, y, z);
  } catch (const std::exception& e) {
    throw std::runtime_error("scalar map '" + u.label() + "' failed at atoms (" +
                             std::to_string(x) + ", " + std::to_string(y) + "): " + e.what());
  }
  if (!std::isfinite(v))
    throw std::runtime_error("scalar map '" + u.label() +
                             "' returned a non-finite value at atoms (" + std::to_string(x) +
                             ", " + std::to_string(y) + ")");
  return v;
}

} // namespace

GridFunction nemytskii_apply(const ScalarMap2& n, const GridFunction& g) {
  std::vector<double> out(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x)
    out[static_cast<std::size_t>(x)] = eval_or_report(n, x, g.value(x));
  return GridFunction(g.space_ptr(), std::move(out));
}

GridFunction urysohn_apply(const ScalarMap3& u, const GridFunction& g, SpacePtr space_x) {
  if (!space_x) throw std::invalid_argument("urysohn_apply: null X space");
  const MeasureSpace& sy = g.space();
  std::vector<double> out(static_cast<std::size_t>(space_x->atom_count()));
  for (int x = 0; x < space_x->atom_count(); ++x) {
    double acc = 0.0;
    for (int y = 0; y < sy.atom_count(); ++y)
      acc += sy.weight(y) * eval_or_report(u, x, y, g.value(y));
    out[static_cast<std::size_t>(x)] = acc;
  }
  return GridFunction(std::move(space_x), std::move(out));
}

GridFunction hammerstein_apply(const Kernel2& h, const ScalarMap2& n, const GridFunction& g) {
  const MeasureSpace& sy = g.space();
  if (h.space_y().atom_count() != sy.atom_count())
    throw std::invalid_argument("hammerstein_apply: kernel Y side does not match g's space");
  SpacePtr sx = h.space_x_ptr();
  std::vector<double> out(static_cast<std::size_t>(sx->atom_count()));
  for (int x = 0; x < sx->atom_count(); ++x) {
    double acc = 0.0;
    for (int y = 0; y < sy.atom_count(); ++y)
      acc += sy.weight(y) * (h.entry(x, y) * eval_or_report(n, y, g.value(y)));
    out[static_cast<std::size_t>(x)] = acc;
  }
  return GridFunction(std::move(sx), std::move(out));
}

std::vector<double> make_z_grid(const GridFunction& g, int n) {
  const double m = g.max_abs_on_support();
  std::vector<double> zs;
  zs.reserve(static_cast<std::size_t>(n + g.size()));
  if (n > 1 && m > 0.0) {
    for (int i = 0; i < n; ++i) zs.push_back(-m + 2.0 * m * i / (n - 1));
  } else {
    zs.push_back(0.0);
  }
  for (int i = 0; i < g.size(); ++i) zs.push_back(g.value(i));
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  return zs;
}

FactorizationWitness check_factorization(const ScalarMap2& n, FactorizationWitness w) {
  if (!w.phi) throw std::invalid_argument("check_factorization: witness carries no phi");
  if (w.z_grid.empty()) throw std::invalid_argument("check_factorization: empty z grid");
  const GridFunction& phi = *w.phi;
  double worst = kInf;
  double scale = 0.0;
  long probes = 0;
  for (int x = 0; x < phi.size(); ++x) {
    for (double z : w.z_grid) {
      const double bound = phi.value(x) * std::pow(std::fabs(z), w.beta);
      const double margin = bound - std::fabs(eval_or_report(n, x, z));
      worst = std::min(worst, margin);
      scale = std::max(scale, std::fabs(bound));
      ++probes;
    }
  }
  w.worst_margin = worst;
  w.scale = scale;
  w.probes = probes;
  return w;
}

FactorizationWitness check_factorization(const ScalarMap3& u, FactorizationWitness w) {
  if (!w.u0) throw std::invalid_argument("check_factorization: witness carries no u0");
  if (w.z_grid.empty()) throw std::invalid_argument("check_factorization: empty z grid");
  const Kernel2& u0 = *w.u0;
  double worst = kInf;
  double scale = 0.0;
  long probes = 0;
  for (int x = 0; x < u0.space_x().atom_count(); ++x) {
    for (int y = 0; y < u0.space_y().atom_count(); ++y) {
      for (double z : w.z_grid) {
        const double bound = u0.entry(x, y) * std::pow(std::fabs(z), w.beta);
        const double margin = bound - std::fabs(eval_or_report(u, x, y, z));
        worst = std::min(worst, margin);
        scale = std::max(scale, std::fabs(bound));
        ++probes;
      }
    }
  }
  w.worst_margin = worst;
  w.scale = scale;
  w.probes = probes;
  return w;
}

} // namespace gls
