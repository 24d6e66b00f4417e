#ifndef GLS_DETAIL_GOLDEN_HPP
#define GLS_DETAIL_GOLDEN_HPP

#include <cmath>
#include <functional>

namespace gls::detail {

struct GoldenResult {
  double arg = 0.0;
  double value = 0.0;
  long evals = 0;
};

/// Golden-section minimization on [lo, hi].  The objective may return +inf
/// inside the bracket (support boundaries between samples); infinities
/// compare as larger and the bracket shrinks away from them.  Stops when the
/// bracket width drops below arg_tol relative to the midpoint magnitude.
inline GoldenResult golden_min(const std::function<double(double)>& g, double lo, double hi,
                               double arg_tol_rel = 1e-8, int max_iter = 200) {
  constexpr double kInvPhi = 0.6180339887498949;
  GoldenResult best;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  best.evals = 2;
  if (f1 <= f2) {
    best.arg = x1;
    best.value = f1;
  } else {
    best.arg = x2;
    best.value = f2;
  }
  for (int it = 0; it < max_iter; ++it) {
    if ((b - a) <= arg_tol_rel * std::max(1.0, std::fabs(0.5 * (a + b)))) break;
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = g(x2);
    }
    ++best.evals;
    double fc = std::min(f1, f2);
    if (fc < best.value) {
      best.value = fc;
      best.arg = (f1 <= f2) ? x1 : x2;
    }
  }
  return best;
}

} // namespace gls::detail

#endif
