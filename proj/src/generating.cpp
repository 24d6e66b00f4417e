#include "gls/generating.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "gls/norms.hpp"

namespace gls {

namespace {

void check_support(const Interval& s) {
  if (!(s.lo >= 1.0) || !(s.lo < s.hi))
    throw std::invalid_argument("generating function support must satisfy 1 <= a < b <= inf");
}

} // namespace

GeneratingFunction::GeneratingFunction(Rule rule, Interval support)
    : rule_(std::move(rule)), support_(support) {
  check_support(support_);
  if (auto* c = std::get_if<Constant>(&rule_)) {
    if (!(c->value > 0.0) || !std::isfinite(c->value))
      throw std::invalid_argument("constant rule must be strictly positive and finite");
  } else if (auto* pw = std::get_if<Power>(&rule_)) {
    if (!(pw->scale > 0.0) || !std::isfinite(pw->scale) || !std::isfinite(pw->gamma))
      throw std::invalid_argument("power rule needs positive finite scale and finite exponent");
  } else if (auto* tab = std::get_if<Tabulated>(&rule_)) {
    if (tab->p.size() != tab->value.size() || tab->p.size() < 2)
      throw std::invalid_argument("tabulated rule needs >= 2 matching nodes");
    for (std::size_t i = 0; i < tab->p.size(); ++i) {
      if (!(tab->value[i] > 0.0) || !std::isfinite(tab->value[i]))
        throw std::invalid_argument("tabulated rule values must be strictly positive and finite");
      if (i > 0 && !(tab->p[i] > tab->p[i - 1]))
        throw std::invalid_argument("tabulated rule nodes must be strictly increasing");
    }
  }
}

double GeneratingFunction::eval_inside(double p) const {
  if (const auto* c = std::get_if<Constant>(&rule_)) return c->value;
  if (const auto* pw = std::get_if<Power>(&rule_)) return pw->scale * std::pow(p, pw->gamma);
  if (const auto* tab = std::get_if<Tabulated>(&rule_)) {
    const auto& ps = tab->p;
    auto it = std::upper_bound(ps.begin(), ps.end(), p);
    std::size_t hi = static_cast<std::size_t>(it - ps.begin());
    if (hi == 0 || hi >= ps.size()) return kInf; // no extrapolation
    std::size_t lo = hi - 1;
    double t = (std::log(p) - std::log(ps[lo])) / (std::log(ps[hi]) - std::log(ps[lo]));
    double lv = std::log(tab->value[lo]);
    double hv = std::log(tab->value[hi]);
    return std::exp(lv + t * (hv - lv));
  }
  if (const auto* nat = std::get_if<Natural>(&rule_)) return lp_norm(nat->f, p);
  const auto& m = std::get<Mapped>(rule_);
  double v = m.fn(p);
  if (!std::isfinite(v) || v <= 0.0) return kInf;
  return v;
}

double GeneratingFunction::operator()(double p) const {
  if (p < 1.0) throw std::invalid_argument("generating function evaluated at p < 1");
  if (!support_.contains(p)) return kInf;
  return eval_inside(p);
}

double GeneratingFunction::eval_capped(double p) const {
  if (p <= kExponentCap) return (*this)(p);
  if (support_.unbounded()) {
    if (auto lim = limit_at_sup()) return *lim;
    return (*this)(p);
  }
  return kInf; // p > cap >= b: outside support
}

std::optional<double> GeneratingFunction::limit_at_sup() const {
  const double b = support_.hi;
  if (const auto* c = std::get_if<Constant>(&rule_)) return c->value;
  if (const auto* pw = std::get_if<Power>(&rule_)) {
    if (std::isfinite(b)) return pw->scale * std::pow(b, pw->gamma);
    if (pw->gamma > 0.0) return kInf;
    if (pw->gamma == 0.0) return pw->scale;
    return 0.0;
  }
  if (const auto* tab = std::get_if<Tabulated>(&rule_)) {
    if (std::isfinite(b)) return tab->value.back();
    return std::nullopt;
  }
  if (const auto* nat = std::get_if<Natural>(&rule_)) return lp_norm(nat->f, b);
  return std::nullopt;
}

std::span<const double> GeneratingFunction::nodes() const {
  if (const auto* tab = std::get_if<Tabulated>(&rule_)) return tab->p;
  return {};
}

std::span<const double> GeneratingFunction::node_values() const {
  if (const auto* tab = std::get_if<Tabulated>(&rule_)) return tab->value;
  return {};
}

GeneratingFunction beta_transform(const GeneratingFunction& psi, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta_transform: beta must be positive");
  const Interval s = psi.support();
  Interval mapped{s.lo / beta, std::isfinite(s.hi) ? s.hi / beta : kInf};
  Interval support = intersect(mapped, Interval{1.0, kInf});
  if (!(support.lo < support.hi))
    throw std::invalid_argument("beta_transform: transformed support is empty");
  // Support lower end may fall below 1 after division; clamp to the standing
  // exponent range.
  if (support.lo < 1.0) support.lo = 1.0;
  GeneratingFunction base = psi;
  auto fn = [base, beta](double p) { return std::pow(base(beta * p), beta); };
  return GeneratingFunction(GeneratingFunction::Mapped{std::move(fn), "beta_transform"},
                            support);
}

GeneratingFunction natural_from_function(const GridFunction& f, Interval support) {
  if (f.max_abs_on_support() == 0.0)
    throw std::invalid_argument(
        "natural_from_function: function vanishes on every atom of positive weight");
  return GeneratingFunction(GeneratingFunction::Natural{f}, support);
}

GeneratingFunction make_tabulated(std::vector<double> p, std::vector<double> value) {
  if (p.size() < 2) throw std::invalid_argument("make_tabulated: need >= 2 nodes");
  Interval support{p.front(), p.back()};
  return GeneratingFunction(
      GeneratingFunction::Tabulated{std::move(p), std::move(value)}, support);
}

GeneratingFunction2::GeneratingFunction2(Rule rule, Interval support_q, Interval support_r)
    : rule_(std::move(rule)), support_q_(support_q), support_r_(support_r) {
  check_support(support_q_);
  check_support(support_r_);
  if (auto* c = std::get_if<Constant2>(&rule_)) {
    if (!(c->value > 0.0) || !std::isfinite(c->value))
      throw std::invalid_argument("constant rule must be strictly positive and finite");
  }
}

double GeneratingFunction2::operator()(double q, double r) const {
  if (q < 1.0 || r < 1.0)
    throw std::invalid_argument("bivariate generating function evaluated below 1");
  if (!support_q_.contains(q) || !support_r_.contains(r)) return kInf;
  if (const auto* c = std::get_if<Constant2>(&rule_)) return c->value;
  if (const auto* pw = std::get_if<Power2>(&rule_))
    return pw->scale * std::pow(q, pw->gamma_q) * std::pow(r, pw->gamma_r);
  if (const auto* nat = std::get_if<Natural2>(&rule_)) return mixed_norm(nat->h, q, r);
  const auto& m = std::get<Mapped2>(rule_);
  double v = m.fn(q, r);
  if (!std::isfinite(v) || v <= 0.0) return kInf;
  return v;
}

std::optional<double> GeneratingFunction2::eval_at_inf(double q, double r) const {
  if (const auto* c = std::get_if<Constant2>(&rule_)) return c->value;
  if (const auto* nat = std::get_if<Natural2>(&rule_)) return mixed_norm(nat->h, q, r);
  return std::nullopt;
}

double GeneratingFunction2::eval_capped(double q, double r) const {
  const bool qcap = q > kExponentCap;
  const bool rcap = r > kExponentCap;
  if (!qcap && !rcap) return (*this)(q, r);
  if ((qcap && !support_q_.unbounded()) || (rcap && !support_r_.unbounded())) return kInf;
  if (auto v = eval_at_inf(qcap ? kInf : q, rcap ? kInf : r)) return *v;
  return (*this)(std::min(q, kExponentCap), std::min(r, kExponentCap));
}

GeneratingFunction2 natural_from_kernel(const Kernel2& h) {
  return GeneratingFunction2(GeneratingFunction2::Natural2{h}, Interval{1.0, kInf},
                             Interval{1.0, kInf});
}

} // namespace gls
