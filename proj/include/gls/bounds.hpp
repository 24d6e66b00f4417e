#ifndef GLS_BOUNDS_HPP
#define GLS_BOUNDS_HPP

#include <functional>
#include <vector>

#include "gls/generating.hpp"
#include "gls/norms.hpp"
#include "gls/spaces.hpp"

namespace gls {

/// Conjugate exponent triple with 1/r = 1/p + 1/q.
struct HolderTriple {
  double p = 2.0;
  double q = 2.0;
  double r = 1.0;

  /// q = pr/(p-r) for p > r; q = inf when p = r; q = r when p = inf.
  static HolderTriple from_p_r(double p, double r);
  static HolderTriple from_p_q(double p, double q);
};

/// Exponent chain of the Hammerstein bound: 1/r = 1/p + 1/q and
/// 1/s + 1/t = 1/p with p, q, r, s, t > 1, p > r, t > p.
struct HammersteinPoint {
  double r = 1.0, p = 2.0, q = 2.0, s = 2.0, t = 4.0;

  static HammersteinPoint from_r_p_t(double r, double p, double t);
  bool valid() const;
};

struct InfimumResult {
  double value = kInf;
  double arg = 0.0;
  /// False when the minimum sits at a shrinking-epsilon boundary point (an
  /// endpoint limit) or at the grid cap of an unbounded domain.
  bool converged = true;
  long evaluations = 0;
};

struct Infimum2dResult {
  double value = kInf;
  double arg_p = 0.0;
  double arg_t = 0.0;
  bool converged = true;
  long evaluations = 0;
};

struct InfimumOptions {
  int grid_points = 200;
  double hi_cap = kGridCap;
  double arg_tol_rel = 1e-8;
  bool refine = true;
};

/// Infimum of an extended-real objective over the open interval
/// (left, right): epsilon ladder near the left endpoint (1e-6 down to
/// 1e-10), coarse log grid up to min(right, cap), golden-section refinement
/// around the best sample.  Ties within 1e-12 relative resolve to the
/// smallest argument.  Throws EverywhereInfinite when no sample is finite.
InfimumResult infimum_open_1d(const std::function<double(double)>& objective, double left,
                              double right, double tol, const InfimumOptions& opts = {});

/// Infimum over the Hammerstein domain D(r) = {(p, t): p > r, t > p}:
/// nested 1-D strategy (outer p, inner t) followed by coordinate-descent
/// polish.  Same tie-breaking (smallest p, then smallest t) and the same
/// everywhere-infinite error.
Infimum2dResult infimum_open_2d(const std::function<double(double, double)>& objective,
                                double r, double tol, const InfimumOptions& opts = {});

/// W_a(p, r) = nu(pr/(p-r)) * psi(beta p)^beta with the sentinel propagated
/// and the conjugate exponent capped (above the cap the limit value of nu is
/// substituted).  Requires p > r >= 1.
double w_aux(const GeneratingFunction& psi, const GeneratingFunction& nu_gen, double beta,
             double p, double r);

/// Tabulated bound generating function over an r grid, with the optimizer
/// argument(s) per node.  The support is the discovered finiteness segment.
struct BoundTable {
  std::vector<double> r;
  std::vector<double> value;  // +inf where the infimum is everywhere infinite
  std::vector<double> arg_p;
  std::vector<double> arg_t;  // empty for one-parameter bounds
  std::vector<bool> converged;

  bool finite_at(std::size_t i) const { return std::isfinite(value[i]); }
  std::size_t finite_count() const;
  /// Longest contiguous finite run as a tabulated generating function.
  GeneratingFunction to_generating_function() const;
};

/// W[psi, nu; beta](r) = inf_{p > r} W_a(p, r) over the r grid.
/// Throws NowhereFinite when every node is infinite.
BoundTable nemytskii_w(const GeneratingFunction& psi, const GeneratingFunction& nu_gen,
                       double beta, const std::vector<double>& r_grid, double tol = 1e-7);

/// kappa(q, r) = || ||u0||_{q,Y} ||_{r,X}.
double kappa(const Kernel2& u0, double q, double r);

/// theta(r) = inf_{p > r} psi(beta p)^beta * kappa(pr/(p-r), r); the
/// conjugate exponent above the cap uses the essential-sup norm exactly.
BoundTable urysohn_theta(const GeneratingFunction& psi, const Kernel2& u0, double beta,
                         const std::vector<double>& r_grid, double tol = 1e-7);

/// The three factors of the Hammerstein majorant, abstracted so the same
/// optimizer serves both the raw-norm form and its generating-function
/// majorant: factor(q,r) for the kernel, factor(s) for phi, factor(t) for
/// g^beta.  Implementations handle their own exponent capping.
struct UpsilonFactors {
  std::function<double(double, double)> kernel_factor;
  std::function<double(double)> phi_factor;
  std::function<double(double)> g_beta_factor;
};

/// upsilon(r; p, t) = kernel_factor(q, r) * phi_factor(s) * g_beta_factor(t)
/// at the exponent chain of the point; sentinel-propagating product.
double upsilon(const HammersteinPoint& pt, const UpsilonFactors& factors);

/// Delta(r) = inf over D(r) of upsilon(r; p, t), tabulated over the r grid.
BoundTable hammerstein_delta(const UpsilonFactors& factors, const std::vector<double>& r_grid,
                             double tol = 1e-7);

/// Product where any +inf factor dominates (even against zero).
double sentinel_product(double a, double b);
double sentinel_product(double a, double b, double c);

} // namespace gls

#endif
