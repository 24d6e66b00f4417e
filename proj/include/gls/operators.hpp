#ifndef GLS_OPERATORS_HPP
#define GLS_OPERATORS_HPP

#include <optional>
#include <vector>

#include "gls/spaces.hpp"

namespace gls {

/// Substitution operator: result(x) = n(x, g(x)).
GridFunction nemytskii_apply(const ScalarMap2& n, const GridFunction& g);

/// Integral operator over Y: result(x) = sum_y w_y u(x, y, g(y)).
GridFunction urysohn_apply(const ScalarMap3& u, const GridFunction& g, SpacePtr space_x);

/// Kernel-times-nonlinearity operator: result(x) = sum_y w_y h(x,y) n(y, g(y)).
/// Coincides with urysohn_apply under u(x,y,z) = h(x,y) * n(y,z); the sum is
/// accumulated in the same atom order so the two routes agree bitwise.
GridFunction hammerstein_apply(const Kernel2& h, const ScalarMap2& n, const GridFunction& g);

/// Probe data and outcome for a domination condition |n(x,z)| <= phi(x)|z|^b
/// (or |u(x,y,z)| <= u0(x,y)|z|^b).  worst_margin is the smallest value of
/// bound - |map| over all probes: nonnegative exactly when the condition
/// holds on every probe.
struct FactorizationWitness {
  double beta = 1.0;
  std::optional<GridFunction> phi; // pointwise form
  std::optional<Kernel2> u0;       // kernel form
  std::vector<double> z_grid;

  double worst_margin = 0.0;
  double scale = 0.0; // largest bound magnitude probed
  long probes = 0;

  /// Certified up to floating-point slack proportional to the probed scale.
  bool certified(double rel_tol = 1e-12) const { return worst_margin >= -rel_tol * scale; }
};

/// z-probe grid: n points spanning [-max|g|, max|g|] plus the exact values
/// of g.  Probing the realized values makes equality cases land exactly.
std::vector<double> make_z_grid(const GridFunction& g, int n = 257);

FactorizationWitness check_factorization(const ScalarMap2& n, FactorizationWitness witness);
FactorizationWitness check_factorization(const ScalarMap3& u, FactorizationWitness witness);

} // namespace gls

#endif
