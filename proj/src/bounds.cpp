#include "gls/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gls/detail/golden.hpp"
#include "gls/parallel.hpp"

namespace gls {

double sentinel_product(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return kInf;
  if (a == kInf || b == kInf) return kInf; // sentinel dominates, even against zero
  return a * b;
}

double sentinel_product(double a, double b, double c) {
  return sentinel_product(sentinel_product(a, b), c);
}

HolderTriple HolderTriple::from_p_r(double p, double r) {
  if (!(r >= 1.0) || !(p >= r))
    throw std::invalid_argument("HolderTriple: need p >= r >= 1");
  HolderTriple h;
  h.p = p;
  h.r = r;
  if (std::isinf(p))
    h.q = r;
  else if (p == r)
    h.q = kInf;
  else
    h.q = p * r / (p - r);
  return h;
}

HolderTriple HolderTriple::from_p_q(double p, double q) {
  if (!(p >= 1.0) || !(q >= 1.0))
    throw std::invalid_argument("HolderTriple: need p, q >= 1");
  HolderTriple h;
  h.p = p;
  h.q = q;
  const double inv = (std::isinf(p) ? 0.0 : 1.0 / p) + (std::isinf(q) ? 0.0 : 1.0 / q);
  h.r = inv == 0.0 ? kInf : 1.0 / inv;
  return h;
}

HammersteinPoint HammersteinPoint::from_r_p_t(double r, double p, double t) {
  HammersteinPoint pt;
  pt.r = r;
  pt.p = p;
  pt.t = t;
  pt.q = (p > r) ? p * r / (p - r) : kInf;
  pt.s = (t > p) ? t * p / (t - p) : kInf;
  return pt;
}

bool HammersteinPoint::valid() const {
  return r > 1.0 && p > r && t > p && q > 1.0 && s > 1.0 && std::isfinite(p) &&
         std::isfinite(t) && std::isfinite(r);
}

namespace {

// Evaluation at exponents below 1 counts as outside every support.
double eval_gen_ext(const GeneratingFunction& g, double x) {
  if (x < 1.0) return kInf;
  return g(x);
}

std::vector<double> infimum_candidates(double left, double right, const InfimumOptions& opts,
                                       bool& truncated_right) {
  const double hi = std::min(right, opts.hi_cap);
  truncated_right = right > opts.hi_cap;
  std::vector<double> cand;
  // The epsilon ladder runs through every decade up to 1e-1 so that no gap
  // is left between the shrinking-epsilon boundary samples and the first
  // step of the coarse log grid.
  for (double eps = 1e-10; eps < 0.2; eps *= 10.0) cand.push_back(left * (1.0 + eps));
  const double glo = left * (1.0 + 1e-6);
  const double ghi = truncated_right ? hi : hi * (1.0 - 1e-6);
  if (ghi > glo) {
    const auto grid = PGrid::log_spaced(glo, ghi, opts.grid_points);
    cand.insert(cand.end(), grid.points.begin(), grid.points.end());
  }
  if (!truncated_right)
    for (double eps = 1e-10; eps < 0.2; eps *= 10.0) cand.push_back(right * (1.0 - eps));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  // Strict interior of (left, right).
  while (!cand.empty() && !(cand.front() > left)) cand.erase(cand.begin());
  while (!cand.empty() && !(cand.back() < right)) cand.pop_back();
  return cand;
}

} // namespace

InfimumResult infimum_open_1d(const std::function<double(double)>& objective, double left,
                              double right, double tol, const InfimumOptions& opts) {
  if (!(left >= 1.0)) throw std::invalid_argument("infimum_open_1d: left endpoint must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("infimum_open_1d: tol must be positive");
  if (!(right > left)) throw std::invalid_argument("infimum_open_1d: empty domain");

  bool truncated_right = false;
  const auto cand = infimum_candidates(left, right, opts, truncated_right);
  if (cand.empty()) throw EverywhereInfinite("infimum_open_1d: domain too thin to sample");

  InfimumResult out;
  out.converged = true;
  std::vector<double> vals(cand.size(), kInf);
  double vmin = kInf;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    double v = objective(cand[i]);
    ++out.evaluations;
    if (std::isnan(v)) v = kInf;
    vals[i] = v;
    vmin = std::min(vmin, v);
  }
  if (!std::isfinite(vmin))
    throw EverywhereInfinite("infimum_open_1d: objective is infinite at every sample");

  // Ties resolve to the smallest argument.
  const double tie = vmin + 1e-12 * std::max(1.0, std::fabs(vmin));
  std::size_t best_i = 0;
  while (best_i < cand.size() && !(vals[best_i] <= tie)) ++best_i;
  out.value = vals[best_i];
  out.arg = cand[best_i];

  if (opts.refine && cand.size() >= 2) {
    const double blo = cand[best_i == 0 ? 0 : best_i - 1];
    const double bhi = cand[std::min(best_i + 1, cand.size() - 1)];
    if (bhi > blo) {
      auto wrapped = [&](double u) {
        double v = objective(std::exp(u));
        ++out.evaluations;
        return std::isnan(v) ? kInf : v;
      };
      auto ref = detail::golden_min(wrapped, std::log(blo), std::log(bhi), opts.arg_tol_rel);
      if (ref.value < out.value) {
        out.value = ref.value;
        out.arg = std::exp(ref.arg);
      }
    }
  }

  if (best_i == 0) out.converged = false; // descending into the left endpoint
  if (best_i + 1 == cand.size()) out.converged = false; // right endpoint or cap
  return out;
}

Infimum2dResult infimum_open_2d(const std::function<double(double, double)>& objective,
                                double r, double tol, const InfimumOptions& opts) {
  if (!(r >= 1.0)) throw std::invalid_argument("infimum_open_2d: r must be >= 1");
  Infimum2dResult out;

  InfimumOptions inner_scan = opts;
  inner_scan.grid_points = std::max(24, opts.grid_points / 3);
  inner_scan.refine = false;

  bool truncated = false;
  InfimumOptions outer_opts = opts;
  outer_opts.grid_points = std::max(32, opts.grid_points / 4);
  const auto outer = infimum_candidates(r, kInf, outer_opts, truncated);

  for (double p : outer) {
    try {
      auto in = infimum_open_1d([&](double t) { return objective(p, t); }, p, kInf, tol,
                                inner_scan);
      out.evaluations += in.evaluations;
      if (in.value < out.value) {
        out.value = in.value;
        out.arg_p = p;
        out.arg_t = in.arg;
      }
    } catch (const EverywhereInfinite&) {
      continue;
    }
  }
  if (!std::isfinite(out.value))
    throw EverywhereInfinite("infimum_open_2d: objective is infinite on every sampled point");

  // Boundary curves of D(r).  Minima frequently sit on the diagonal t -> p+,
  // on the edge p -> r+, or at the grid cap; each curve gets the full 1-D
  // treatment (ladder, grid, golden section) that the nested scan lacks.
  auto try_curve = [&](const std::function<double(double)>& curve, double left, double right,
                       auto to_point) {
    try {
      auto res = infimum_open_1d(curve, left, right, tol, opts);
      out.evaluations += res.evaluations;
      if (res.value < out.value) {
        out.value = res.value;
        const auto [p, t] = to_point(res.arg);
        out.arg_p = p;
        out.arg_t = t;
      }
    } catch (const EverywhereInfinite&) {
    }
  };
  try_curve([&](double p) { return objective(p, p * (1.0 + 1e-10)); }, r, kInf,
            [](double p) { return std::pair{p, p * (1.0 + 1e-10)}; });
  try_curve([&](double p) { return objective(p, kGridCap); }, r, kGridCap,
            [](double p) { return std::pair{p, kGridCap}; });
  try_curve([&](double t) { return objective(r * (1.0 + 1e-10), t); }, r * (1.0 + 1e-10), kInf,
            [r](double t) { return std::pair{r * (1.0 + 1e-10), t}; });

  // Polish: coordinate descent plus diagonal line searches.  Pure coordinate
  // steps zigzag in the narrow valleys the conjugacy coupling creates, so
  // the scaling direction (p, t) -> (p m, t m) and its counterpart
  // (p m, t / m) are searched as well.
  auto direction_search = [&](double ea, double eb) {
    const double p0 = out.arg_p, t0 = out.arg_t;
    double m_lo = 0.0, m_hi = kInf;
    auto bound = [&](double base, double expn, double lo_lim, double hi_lim) {
      if (expn == 0.0) return;
      double a = std::pow(lo_lim / base, 1.0 / expn);
      double b = std::pow(hi_lim / base, 1.0 / expn);
      if (expn < 0.0) std::swap(a, b);
      m_lo = std::max(m_lo, a);
      m_hi = std::min(m_hi, b);
    };
    bound(p0, ea, r, opts.hi_cap);
    bound(t0, eb, 1.0 + 1e-12, opts.hi_cap);
    const double de = eb - ea;
    if (de != 0.0) {
      const double c = std::pow(p0 / t0, 1.0 / de); // keeps t > p
      if (de > 0.0)
        m_lo = std::max(m_lo, c);
      else
        m_hi = std::min(m_hi, c);
    }
    if (!(m_lo > 0.0) || !(m_hi / m_lo > 1.0 + 1e-9)) return;
    auto g = [&](double w) {
      const double m = m_lo * w;
      return objective(p0 * std::pow(m, ea), t0 * std::pow(m, eb));
    };
    try {
      auto res = infimum_open_1d(g, 1.0, m_hi / m_lo, tol, opts);
      out.evaluations += res.evaluations;
      if (res.value < out.value) {
        const double m = m_lo * res.arg;
        out.value = res.value;
        out.arg_p = p0 * std::pow(m, ea);
        out.arg_t = t0 * std::pow(m, eb);
      }
    } catch (const EverywhereInfinite&) {
    }
  };

  bool t_conv = true, p_conv = true;
  for (int round = 0; round < 6; ++round) {
    const double prev = out.value;
    try {
      auto it = infimum_open_1d([&](double t) { return objective(out.arg_p, t); }, out.arg_p,
                                kInf, tol, opts);
      out.evaluations += it.evaluations;
      t_conv = it.converged;
      if (it.value < out.value) {
        out.value = it.value;
        out.arg_t = it.arg;
      }
    } catch (const EverywhereInfinite&) {
    }
    try {
      auto ip = infimum_open_1d([&](double p) { return objective(p, out.arg_t); }, r, out.arg_t,
                                tol, opts);
      out.evaluations += ip.evaluations;
      p_conv = ip.converged;
      if (ip.value < out.value) {
        out.value = ip.value;
        out.arg_p = ip.arg;
      }
    } catch (const EverywhereInfinite&) {
    }
    direction_search(1.0, 1.0);
    direction_search(1.0, -1.0);
    if (prev - out.value <= 0.01 * tol * std::max(1.0, std::fabs(out.value))) break;
  }
  out.converged = t_conv && p_conv;
  return out;
}

double w_aux(const GeneratingFunction& psi, const GeneratingFunction& nu_gen, double beta,
             double p, double r) {
  if (!(r >= 1.0) || !(p > r)) throw std::invalid_argument("w_aux: need p > r >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("w_aux: beta must be positive");
  const double q = HolderTriple::from_p_r(p, r).q;
  const double nu_val = nu_gen.eval_capped(q);
  const double psi_val = eval_gen_ext(psi, beta * p);
  return sentinel_product(nu_val, std::pow(psi_val, beta));
}

std::size_t BoundTable::finite_count() const {
  std::size_t n = 0;
  for (double v : value)
    if (std::isfinite(v)) ++n;
  return n;
}

GeneratingFunction BoundTable::to_generating_function() const {
  // Longest contiguous finite run; the support is the open span of its nodes.
  std::size_t best_lo = 0, best_len = 0, run_lo = 0, run_len = 0;
  for (std::size_t i = 0; i <= value.size(); ++i) {
    if (i < value.size() && std::isfinite(value[i])) {
      if (run_len == 0) run_lo = i;
      ++run_len;
      if (run_len > best_len) {
        best_len = run_len;
        best_lo = run_lo;
      }
    } else {
      run_len = 0;
    }
  }
  if (best_len < 2)
    throw NowhereFinite("bound table: finiteness segment has fewer than two nodes");
  std::vector<double> ps(r.begin() + static_cast<std::ptrdiff_t>(best_lo),
                         r.begin() + static_cast<std::ptrdiff_t>(best_lo + best_len));
  std::vector<double> vs(value.begin() + static_cast<std::ptrdiff_t>(best_lo),
                         value.begin() + static_cast<std::ptrdiff_t>(best_lo + best_len));
  return make_tabulated(std::move(ps), std::move(vs));
}

namespace {

BoundTable tabulate_1d(const std::vector<double>& r_grid,
                       const std::function<double(double, double)>& objective_pr,
                       double tol, const char* what) {
  for (double r : r_grid)
    if (!(r >= 1.0)) throw std::invalid_argument(std::string(what) + ": r grid must stay >= 1");
  BoundTable table;
  const std::size_t n = r_grid.size();
  table.r = r_grid;
  table.value.assign(n, kInf);
  table.arg_p.assign(n, 0.0);
  table.converged.assign(n, false);
  parallel_for(n, [&](std::size_t i) {
    const double r = r_grid[i];
    try {
      auto res = infimum_open_1d([&](double p) { return objective_pr(p, r); }, r, kInf, tol);
      table.value[i] = res.value;
      table.arg_p[i] = res.arg;
      table.converged[i] = res.converged;
    } catch (const EverywhereInfinite&) {
      // node stays infinite; the finiteness segment is discovered, not assumed
    }
  });
  if (table.finite_count() == 0)
    throw NowhereFinite(std::string(what) + ": bound is infinite at every grid node");
  return table;
}

} // namespace

BoundTable nemytskii_w(const GeneratingFunction& psi, const GeneratingFunction& nu_gen,
                       double beta, const std::vector<double>& r_grid, double tol) {
  if (!(beta > 0.0)) throw std::invalid_argument("nemytskii_w: beta must be positive");
  return tabulate_1d(
      r_grid, [&](double p, double r) { return w_aux(psi, nu_gen, beta, p, r); }, tol,
      "nemytskii_w");
}

double kappa(const Kernel2& u0, double q, double r) { return mixed_norm(u0, q, r); }

BoundTable urysohn_theta(const GeneratingFunction& psi, const Kernel2& u0, double beta,
                         const std::vector<double>& r_grid, double tol) {
  if (!(beta > 0.0)) throw std::invalid_argument("urysohn_theta: beta must be positive");
  auto objective = [&](double p, double r) {
    const double q = HolderTriple::from_p_r(p, r).q;
    const double k = q > kExponentCap ? kappa(u0, kInf, r) : kappa(u0, q, r);
    return sentinel_product(std::pow(eval_gen_ext(psi, beta * p), beta), k);
  };
  return tabulate_1d(r_grid, objective, tol, "urysohn_theta");
}

double upsilon(const HammersteinPoint& pt, const UpsilonFactors& factors) {
  if (!pt.valid())
    throw std::invalid_argument("upsilon: exponent point violates the domain constraints");
  return sentinel_product(factors.kernel_factor(pt.q, pt.r), factors.phi_factor(pt.s),
                          factors.g_beta_factor(pt.t));
}

BoundTable hammerstein_delta(const UpsilonFactors& factors, const std::vector<double>& r_grid,
                             double tol) {
  for (double r : r_grid)
    if (!(r > 1.0))
      throw std::invalid_argument("hammerstein_delta: r grid must stay > 1");
  BoundTable table;
  const std::size_t n = r_grid.size();
  table.r = r_grid;
  table.value.assign(n, kInf);
  table.arg_p.assign(n, 0.0);
  table.arg_t.assign(n, 0.0);
  table.converged.assign(n, false);
  parallel_for(n, [&](std::size_t i) {
    const double r = r_grid[i];
    auto objective = [&](double p, double t) {
      const auto pt = HammersteinPoint::from_r_p_t(r, p, t);
      if (!pt.valid()) return kInf;
      return upsilon(pt, factors);
    };
    try {
      auto res = infimum_open_2d(objective, r, tol);
      table.value[i] = res.value;
      table.arg_p[i] = res.arg_p;
      table.arg_t[i] = res.arg_t;
      table.converged[i] = res.converged;
    } catch (const EverywhereInfinite&) {
    }
  });
  if (table.finite_count() == 0)
    throw NowhereFinite("hammerstein_delta: bound is infinite at every grid node");
  return table;
}

} // namespace gls
