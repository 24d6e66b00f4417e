#include "gls/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gls/detail/golden.hpp"

namespace gls {

double lp_norm(const GridFunction& f, double p) {
  if (std::isinf(p)) return f.max_abs_on_support();
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: exponent must be >= 1 or inf");
  const MeasureSpace& sp = f.space();
  const double maxabs = f.max_abs_on_support();
  if (maxabs == 0.0) return 0.0;
  // Shift by the essential sup before exponentiation: every ratio is <= 1,
  // so p up to the grid cap cannot overflow and only near-max atoms carry
  // weight in the sum.
  double sum = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const double w = sp.weight(i);
    if (w <= 0.0) continue;
    const double v = std::fabs(f.value(i));
    if (v == 0.0) continue;
    sum += w * std::pow(v / maxabs, p);
  }
  return maxabs * std::pow(sum, 1.0 / p);
}

double lp_norm(const GridFunction& f, const PNormRequest& req) {
  if (req.log_domain) return lp_norm(f, req.p);
  if (std::isinf(req.p)) return f.max_abs_on_support();
  if (!(req.p >= 1.0)) throw std::invalid_argument("lp_norm: exponent must be >= 1 or inf");
  // Naive power sum in extended precision; independent arithmetic route for
  // cross-checks at moderate exponents.
  long double sum = 0.0L;
  const MeasureSpace& sp = f.space();
  for (int i = 0; i < f.size(); ++i) {
    const double w = sp.weight(i);
    if (w <= 0.0) continue;
    sum += static_cast<long double>(w) *
           powl(fabsl(static_cast<long double>(f.value(i))), static_cast<long double>(req.p));
  }
  return static_cast<double>(powl(sum, 1.0L / static_cast<long double>(req.p)));
}

GridFunction power_apply(const GridFunction& g, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("power_apply: beta must be positive");
  std::vector<double> vals(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i)
    vals[static_cast<std::size_t>(i)] = std::pow(std::fabs(g.value(i)), beta);
  return GridFunction(g.space_ptr(), std::move(vals));
}

double mixed_norm(const Kernel2& h, double q, double r) {
  if (!std::isinf(q) && !(q >= 1.0))
    throw std::invalid_argument("mixed_norm: inner exponent must be >= 1 or inf");
  if (!std::isinf(r) && !(r >= 1.0))
    throw std::invalid_argument("mixed_norm: outer exponent must be >= 1 or inf");
  const int nx = h.space_x().atom_count();
  std::vector<double> inner(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x) inner[static_cast<std::size_t>(x)] = lp_norm(h.row(x), q);
  return lp_norm(GridFunction(h.space_x_ptr(), std::move(inner)), r);
}

double tail_function(const GridFunction& h, double t) {
  double mass = 0.0;
  const MeasureSpace& sp = h.space();
  for (int i = 0; i < h.size(); ++i)
    if (std::fabs(h.value(i)) >= t) mass += sp.weight(i);
  return mass;
}

PGrid PGrid::log_spaced(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("PGrid: need 0 < lo <= hi");
  if (n < 1) throw std::invalid_argument("PGrid: need n >= 1");
  PGrid g;
  g.points.reserve(static_cast<std::size_t>(n));
  if (n == 1 || hi == lo) {
    g.points.push_back(lo);
    return g;
  }
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g.points.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
  g.points.front() = lo;
  g.points.back() = hi;
  return g;
}

PGrid PGrid::for_interval(const Interval& support, int n) {
  double lo = std::max(support.lo, 1.0) * (1.0 + 1e-6);
  double hi = std::min(support.hi, kGridCap);
  if (std::isfinite(support.hi) && support.hi <= kGridCap) hi = support.hi * (1.0 - 1e-9);
  if (!(hi > lo)) {
    const double mid = std::sqrt(std::max(support.lo, 1.0) * std::min(support.hi, kGridCap));
    return log_spaced(mid, mid, 1);
  }
  return log_spaced(lo, hi, n);
}

namespace {

struct RatioScan {
  double best = -1.0;
  double arg = 0.0;
  std::vector<double> ps;     // accepted sample exponents, ascending
  std::vector<double> ratios; // matching ratios
};

// Scan ratio(p) = ||f||_p / psi(p) over the sample points, skipping sentinel
// values of psi.
RatioScan scan_ratio(const GridFunction& f, const GeneratingFunction& psi,
                     const std::vector<double>& pts) {
  RatioScan s;
  for (double p : pts) {
    const double denom = psi(p);
    if (!std::isfinite(denom)) continue;
    const double ratio = lp_norm(f, p) / denom;
    s.ps.push_back(p);
    s.ratios.push_back(ratio);
    if (ratio > s.best) {
      s.best = ratio;
      s.arg = p;
    }
  }
  return s;
}

std::vector<double> with_edge_ladders(const Interval& support, std::vector<double> pts) {
  const double lo = std::max(support.lo, 1.0);
  for (double eps = 1e-10; eps < 0.2; eps *= 10.0) pts.push_back(lo * (1.0 + eps));
  if (std::isfinite(support.hi) && support.hi <= kGridCap)
    for (double eps = 1e-10; eps < 0.2; eps *= 10.0)
      pts.push_back(support.hi * (1.0 - eps));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

} // namespace

GlsNormResult gls_norm(const GridFunction& f, const GeneratingFunction& psi,
                       const PGrid& grid, const GlsNormOptions& opts) {
  if (grid.points.empty()) throw std::invalid_argument("gls_norm: empty grid");
  GlsNormResult out;

  const double f_sup = lp_norm(f, kInf);
  if (f_sup == 0.0) return out; // vanishes a.e.: every ratio is 0

  if (psi.is_tabulated()) {
    // Tabulated rules are scanned at their own nodes, endpoint nodes
    // included: node values are exact where the table was computed, so no
    // interpolation enters the supremum.
    auto ps = psi.nodes();
    auto vs = psi.node_values();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const double ratio = lp_norm(f, ps[i]) / vs[i];
      if (ratio > out.value) {
        out.value = ratio;
        out.arg_p = ps[i];
      }
    }
    return out;
  }

  RatioScan scan = scan_ratio(f, psi, with_edge_ladders(psi.support(), grid.points));
  if (scan.ps.empty())
    throw std::invalid_argument("gls_norm: no grid point falls in the support");
  out.value = scan.best;
  out.arg_p = scan.arg;

  if (opts.refine && scan.ps.size() >= 2) {
    const auto it = std::lower_bound(scan.ps.begin(), scan.ps.end(), scan.arg);
    const std::size_t i = static_cast<std::size_t>(it - scan.ps.begin());
    const double lo = scan.ps[i == 0 ? 0 : i - 1];
    const double hi = scan.ps[std::min(i + 1, scan.ps.size() - 1)];
    if (hi > lo) {
      auto neg = [&](double u) {
        const double p = std::exp(u);
        const double denom = psi(p);
        if (!std::isfinite(denom)) return kInf;
        return -lp_norm(f, p) / denom;
      };
      auto ref = detail::golden_min(neg, std::log(lo), std::log(hi));
      if (-ref.value > out.value) {
        out.value = -ref.value;
        out.arg_p = std::exp(ref.arg);
      }
    }
  }

  // Supremum in the limit: exact essential-sup candidate when the rule has a
  // limit value at the right end of its support.
  if (auto lim = psi.limit_at_sup()) {
    if (*lim == 0.0) throw UnboundedNormError("gls_norm: generating function vanishes in the limit");
    if (std::isfinite(*lim)) {
      const double fb = std::isfinite(psi.support().hi) ? lp_norm(f, psi.support().hi) : f_sup;
      const double ratio = fb / *lim;
      if (ratio > out.value) {
        out.value = ratio;
        out.arg_p = std::isfinite(psi.support().hi) ? psi.support().hi : kInf;
      }
    }
  } else if (psi.support().unbounded() && scan.ps.size() >= 2) {
    const std::size_t n = scan.ps.size();
    const double num = std::log(scan.ratios[n - 1]) - std::log(scan.ratios[n - 2]);
    const double den = std::log(scan.ps[n - 1]) - std::log(scan.ps[n - 2]);
    if (den > 0.0 && num / den > opts.growth_slope_threshold) out.growth_truncated = true;
  }
  return out;
}

GlsNormResult gls_norm(const GridFunction& f, const GeneratingFunction& psi,
                       const GlsNormOptions& opts) {
  if (psi.is_tabulated()) {
    PGrid dummy;
    dummy.points.assign(psi.nodes().begin(), psi.nodes().end());
    return gls_norm(f, psi, dummy, opts);
  }
  return gls_norm(f, psi, PGrid::for_interval(psi.support(), opts.grid_points), opts);
}

QRGrid QRGrid::for_supports(const Interval& sq, const Interval& sr, int n_per_axis) {
  return QRGrid{PGrid::for_interval(sq, n_per_axis), PGrid::for_interval(sr, n_per_axis)};
}

GlsNorm2Result gls_norm_2d(const Kernel2& h, const GeneratingFunction2& tau,
                           const QRGrid& grid, const GlsNormOptions& opts) {
  if (grid.q.points.empty() || grid.r.points.empty())
    throw std::invalid_argument("gls_norm_2d: empty grid");
  GlsNorm2Result out;
  bool any = false;

  auto consider = [&](double q, double r, double denom) {
    if (!std::isfinite(denom) || denom <= 0.0) return;
    const double ratio = mixed_norm(h, q, r) / denom;
    any = true;
    if (ratio > out.value) {
      out.value = ratio;
      out.arg_q = q;
      out.arg_r = r;
    }
  };

  for (double q : grid.q.points)
    for (double r : grid.r.points) consider(q, r, tau(q, r));

  // Axis-limit candidates, exact where the rule evaluates at inf.
  if (tau.support_q().unbounded())
    for (double r : grid.r.points)
      if (auto v = tau.eval_at_inf(kInf, r)) consider(kInf, r, *v);
  if (tau.support_r().unbounded())
    for (double q : grid.q.points)
      if (auto v = tau.eval_at_inf(q, kInf)) consider(q, kInf, *v);
  if (tau.support_q().unbounded() && tau.support_r().unbounded())
    if (auto v = tau.eval_at_inf(kInf, kInf)) consider(kInf, kInf, *v);

  if (!any) throw std::invalid_argument("gls_norm_2d: no grid point falls in the support");

  if (opts.refine && std::isfinite(out.arg_q) && std::isfinite(out.arg_r)) {
    // One coordinate-descent polish pass.
    auto bracket = [](const std::vector<double>& pts, double x) {
      auto it = std::lower_bound(pts.begin(), pts.end(), x);
      std::size_t i = static_cast<std::size_t>(it - pts.begin());
      const double lo = pts[i == 0 ? 0 : i - 1];
      const double hi = pts[std::min(i + 1, pts.size() - 1)];
      return std::pair{lo, hi};
    };
    auto [qlo, qhi] = bracket(grid.q.points, out.arg_q);
    if (qhi > qlo) {
      auto neg = [&](double u) {
        const double q = std::exp(u);
        const double denom = tau(q, out.arg_r);
        if (!std::isfinite(denom)) return kInf;
        return -mixed_norm(h, q, out.arg_r) / denom;
      };
      auto ref = detail::golden_min(neg, std::log(qlo), std::log(qhi));
      if (-ref.value > out.value) {
        out.value = -ref.value;
        out.arg_q = std::exp(ref.arg);
      }
    }
    auto [rlo, rhi] = bracket(grid.r.points, out.arg_r);
    if (rhi > rlo) {
      auto neg = [&](double u) {
        const double r = std::exp(u);
        const double denom = tau(out.arg_q, r);
        if (!std::isfinite(denom)) return kInf;
        return -mixed_norm(h, out.arg_q, r) / denom;
      };
      auto ref = detail::golden_min(neg, std::log(rlo), std::log(rhi));
      if (-ref.value > out.value) {
        out.value = -ref.value;
        out.arg_r = std::exp(ref.arg);
      }
    }
  }

  // Growth check along unbounded axes without an exact limit.
  if (!tau.eval_at_inf(kInf, grid.r.points.front())) {
    auto edge_slope = [&](bool along_q) {
      const auto& axis = along_q ? grid.q.points : grid.r.points;
      if (axis.size() < 2) return 0.0;
      const double a = axis[axis.size() - 2], b = axis.back();
      const double other = along_q ? out.arg_r : out.arg_q;
      const double da = along_q ? tau(a, other) : tau(other, a);
      const double db = along_q ? tau(b, other) : tau(other, b);
      if (!std::isfinite(da) || !std::isfinite(db)) return 0.0;
      const double ra = (along_q ? mixed_norm(h, a, other) : mixed_norm(h, other, a)) / da;
      const double rb = (along_q ? mixed_norm(h, b, other) : mixed_norm(h, other, b)) / db;
      if (ra <= 0.0 || rb <= 0.0) return 0.0;
      return (std::log(rb) - std::log(ra)) / (std::log(b) - std::log(a));
    };
    if (std::isfinite(out.arg_r) && tau.support_q().unbounded() &&
        edge_slope(true) > opts.growth_slope_threshold)
      out.growth_truncated = true;
    if (std::isfinite(out.arg_q) && tau.support_r().unbounded() &&
        edge_slope(false) > opts.growth_slope_threshold)
      out.growth_truncated = true;
  }
  return out;
}

GlsNorm2Result gls_norm_2d(const Kernel2& h, const GeneratingFunction2& tau,
                           const GlsNormOptions& opts) {
  return gls_norm_2d(h, tau, QRGrid::for_supports(tau.support_q(), tau.support_r(), 48), opts);
}

} // namespace gls
