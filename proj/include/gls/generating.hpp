#ifndef GLS_GENERATING_HPP
#define GLS_GENERATING_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gls/common.hpp"
#include "gls/spaces.hpp"

namespace gls {

/// A generating function psi(p): strictly positive and finite on an open
/// support interval (a, b) with 1 <= a < b <= inf, and the +inf sentinel
/// everywhere outside.  The sentinel is a first-class value: products
/// propagate it and infima ignore infinite samples, which is how the
/// finiteness region of a derived bound gets discovered.
class GeneratingFunction {
 public:
  struct Constant {
    double value;
  };
  /// scale * p^gamma
  struct Power {
    double scale;
    double gamma;
  };
  /// Nodes with log-value interpolated linearly against log-p.  No
  /// extrapolation: the support is the open span of the node grid.
  struct Tabulated {
    std::vector<double> p;
    std::vector<double> value;
  };
  /// p -> ||f||_p, the natural generating function of f.
  struct Natural {
    GridFunction f;
  };
  /// Arbitrary positive rule (used by derived transforms).
  struct Mapped {
    std::function<double(double)> fn;
    std::string what;
  };
  using Rule = std::variant<Constant, Power, Tabulated, Natural, Mapped>;

  GeneratingFunction(Rule rule, Interval support);

  /// Evaluate at p >= 1.  Returns the +inf sentinel outside the support.
  /// Rejects p < 1.
  double operator()(double p) const;

  /// Evaluate with the conjugate-exponent cap: above kExponentCap the
  /// limit value at the right end of the support is substituted when the
  /// rule defines one (on finite discrete spaces that limit is exact).
  double eval_capped(double p) const;

  /// Limit as p approaches the right end of the support, when the rule can
  /// provide it: the value at b for continuous rules with finite b, the
  /// p -> inf limit otherwise.  May be +inf (growing rules) or 0 (decaying
  /// rules); nullopt when unknown.
  std::optional<double> limit_at_sup() const;

  const Interval& support() const { return support_; }
  const Rule& rule() const { return rule_; }

  bool is_tabulated() const { return std::holds_alternative<Tabulated>(rule_); }
  /// Node access for tabulated rules (empty otherwise).  Consumers that scan
  /// a tabulated function evaluate at the nodes themselves, endpoint nodes
  /// included, rather than through the open-support sentinel.
  std::span<const double> nodes() const;
  std::span<const double> node_values() const;

 private:
  double eval_inside(double p) const;
  Rule rule_;
  Interval support_;
};

/// Free-function form of evaluation.
inline double eval_gen(const GeneratingFunction& psi, double p) { return psi(p); }

/// The power-operator transform p -> psi(beta p)^beta, with support
/// (a/beta, b/beta) intersected with (1, inf).  beta must be positive;
/// values below 1 are admitted for the exactness experiments.
GeneratingFunction beta_transform(const GeneratingFunction& psi, double beta);

/// The natural generating function psi[f](p) = ||f||_p.  Rejects functions
/// that vanish a.e., whose "natural" function would not be positive.
GeneratingFunction natural_from_function(const GridFunction& f,
                                         Interval support = Interval{1.0, kInf});

/// Tabulated generating function over strictly increasing nodes (>= 2).
GeneratingFunction make_tabulated(std::vector<double> p, std::vector<double> value);

/// A bivariate generating function tau(q, r) on an open rectangle, same
/// sentinel semantics per axis.
class GeneratingFunction2 {
 public:
  struct Constant2 {
    double value;
  };
  /// scale * q^gamma_q * r^gamma_r
  struct Power2 {
    double scale;
    double gamma_q;
    double gamma_r;
  };
  /// (q, r) -> ||h||_{q,Y; r,X}, the natural bivariate function of a kernel.
  struct Natural2 {
    Kernel2 h;
  };
  struct Mapped2 {
    std::function<double(double, double)> fn;
    std::string what;
  };
  using Rule = std::variant<Constant2, Power2, Natural2, Mapped2>;

  GeneratingFunction2(Rule rule, Interval support_q, Interval support_r);

  double operator()(double q, double r) const;

  /// Capped evaluation: an exponent above kExponentCap is treated as inf,
  /// which Constant2 and Natural2 evaluate exactly (essential sup).
  double eval_capped(double q, double r) const;

  /// Exact evaluation allowing infinite exponents, for rules that support it.
  std::optional<double> eval_at_inf(double q, double r) const;

  const Interval& support_q() const { return support_q_; }
  const Interval& support_r() const { return support_r_; }
  const Rule& rule() const { return rule_; }

 private:
  Rule rule_;
  Interval support_q_, support_r_;
};

GeneratingFunction2 natural_from_kernel(const Kernel2& h);

} // namespace gls

#endif
