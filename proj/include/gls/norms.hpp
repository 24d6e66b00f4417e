#ifndef GLS_NORMS_HPP
#define GLS_NORMS_HPP

#include <vector>

#include "gls/common.hpp"
#include "gls/generating.hpp"
#include "gls/spaces.hpp"

namespace gls {

/// Exponent request for a Lebesgue-Riesz norm.  log_domain selects the
/// shifted evaluation (divide by the max, power, sum); the naive power sum
/// exists as an independent arithmetic route for cross-checks.
struct PNormRequest {
  double p = 2.0;
  bool log_domain = true;
};

/// ||f||_p = (sum_v w_v |f_v|^p)^(1/p); for p = inf the essential sup, i.e.
/// max |f_v| over atoms of positive weight (exact on finite spaces, not a
/// limit).  p up to the grid cap stays accurate because the power sum is
/// shifted by max |f| before exponentiation.  Rejects p < 1.
double lp_norm(const GridFunction& f, double p);
double lp_norm(const GridFunction& f, const PNormRequest& req);

/// Pointwise |g|^beta on the same space.  beta > 0.
GridFunction power_apply(const GridFunction& g, double beta);

/// Mixed anisotropic norm: inner q-norm over Y for each x-atom, then outer
/// r-norm over X.  Exponents may be inf.
double mixed_norm(const Kernel2& h, double q, double r);

/// Tail function: total weight of atoms where |h| >= t, for t > 0.
double tail_function(const GridFunction& h, double t);

/// Log-spaced exponent grid.
struct PGrid {
  std::vector<double> points;

  static PGrid log_spaced(double lo, double hi, int n);
  /// Default scan grid for a support interval: n points log-spaced on
  /// [max(a,1)*(1+1e-6), min(b, 512)].
  static PGrid for_interval(const Interval& support, int n = 200);
};

struct GlsNormOptions {
  int grid_points = 200;
  bool refine = true;
  /// d log(ratio) / d log p at the truncation edge beyond which an
  /// unbounded-support scan is flagged as still growing.
  double growth_slope_threshold = 1e-3;
};

struct GlsNormResult {
  double value = 0.0;
  /// Arg-sup; +inf when the p -> inf limit candidate attains the sup.
  double arg_p = 0.0;
  /// True when the ratio was still rising at the grid cap and the rule
  /// offers no limit value; the reported value is the truncated sup.
  bool growth_truncated = false;

  operator double() const { return value; }
};

/// ||f||_{G psi} = sup over the support of ||f||_p / psi(p), approximated by
/// a grid scan with golden-section refinement around the best point.  When
/// the support is unbounded and the rule has a computable limit L at
/// p -> inf, the exact candidate ||f||_inf / L joins the scan, so suprema
/// attained in the limit are reported exactly.  Tabulated rules are scanned
/// at their own nodes (endpoints included) and not refined in between.
/// Throws UnboundedNormError when the ratio provably diverges (limit 0).
GlsNormResult gls_norm(const GridFunction& f, const GeneratingFunction& psi,
                       const PGrid& grid, const GlsNormOptions& opts = {});
GlsNormResult gls_norm(const GridFunction& f, const GeneratingFunction& psi,
                       const GlsNormOptions& opts = {});

struct QRGrid {
  PGrid q;
  PGrid r;

  static QRGrid for_supports(const Interval& sq, const Interval& sr, int n_per_axis = 48);
};

struct GlsNorm2Result {
  double value = 0.0;
  double arg_q = 0.0;
  double arg_r = 0.0;
  bool growth_truncated = false;

  operator double() const { return value; }
};

/// Bivariate version: sup over (q, r) of ||h||_{q,r} / tau(q, r), grid scan
/// plus one coordinate-descent refinement pass.  Rules that evaluate exactly
/// at infinite exponents contribute the inf-axis candidates.
GlsNorm2Result gls_norm_2d(const Kernel2& h, const GeneratingFunction2& tau,
                           const QRGrid& grid, const GlsNormOptions& opts = {});
GlsNorm2Result gls_norm_2d(const Kernel2& h, const GeneratingFunction2& tau,
                           const GlsNormOptions& opts = {});

} // namespace gls

#endif
