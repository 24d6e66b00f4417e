#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "gls/generating.hpp"
#include "gls/instance.hpp"
#include "gls/norms.hpp"

#include "helpers.hpp"

using namespace gls;
using nlohmann::json;

TEST_CASE("eval_gen basics") {
  GeneratingFunction one(GeneratingFunction::Constant{1.0}, {1.0, kInf});
  CHECK(eval_gen(one, 7.0) == doctest::Approx(1.0));

  GeneratingFunction pw(GeneratingFunction::Power{1.0, 1.0}, {1.0, kInf});
  CHECK(eval_gen(pw, 2.5) == doctest::Approx(2.5));

  GeneratingFunction bounded(GeneratingFunction::Constant{3.0}, {1.0, 4.0});
  CHECK(eval_gen(bounded, 5.0) == kInf); // outside the support by convention
  CHECK(eval_gen(bounded, 4.0) == kInf); // the support is open
  CHECK(eval_gen(bounded, 2.0) == doctest::Approx(3.0));

  CHECK_THROWS_AS(eval_gen(one, 0.5), std::invalid_argument);
}

TEST_CASE("support validation") {
  CHECK_THROWS_AS(GeneratingFunction(GeneratingFunction::Constant{1.0}, Interval{0.5, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratingFunction(GeneratingFunction::Constant{1.0}, Interval{3.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratingFunction(GeneratingFunction::Constant{-1.0}, Interval{1.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("beta_transform") {
  GeneratingFunction one(GeneratingFunction::Constant{1.0}, {1.0, kInf});
  auto t1 = beta_transform(one, 3.0);
  CHECK(t1(5.0) == doctest::Approx(1.0)); // constants are fixed by powers

  GeneratingFunction pw(GeneratingFunction::Power{1.0, 1.0}, {1.0, kInf});
  auto t2 = beta_transform(pw, 2.0);
  CHECK(t2(2.0) == doctest::Approx(16.0)); // (psi(4))^2

  CHECK_THROWS_AS(beta_transform(one, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(beta_transform(one, -1.0), std::invalid_argument);

  // beta = 1 reproduces the input pointwise on the common support
  auto t3 = beta_transform(pw, 1.0);
  for (double p : {1.5, 2.0, 7.0, 100.0}) CHECK(t3(p) == doctest::Approx(pw(p)).epsilon(1e-15));

  // support arithmetic: (a, b) -> (a/beta, b/beta) meet (1, inf)
  GeneratingFunction narrow(GeneratingFunction::Constant{2.0}, {1.0, 4.0});
  auto t4 = beta_transform(narrow, 2.0);
  CHECK(t4.support().lo == doctest::Approx(1.0));
  CHECK(t4.support().hi == doctest::Approx(2.0));
  CHECK(t4(1.5) == doctest::Approx(4.0));
  CHECK(t4(3.0) == kInf);
  CHECK_THROWS_AS(beta_transform(narrow, 5.0), std::invalid_argument); // empty support
}

TEST_CASE("beta_transform with beta below one widens the lower edge") {
  auto X = testutil::space({0.5, 0.5});
  auto psi = natural_from_function(testutil::fn(X, {1.0, 3.0}));
  auto t = beta_transform(psi, 0.75);
  CHECK(t.support().lo == doctest::Approx(1.0 / 0.75));
  CHECK(t(1.2) == kInf);
  CHECK(std::isfinite(t(2.0)));
}

TEST_CASE("beta_transform against the power identity") {
  // two routes: (psi[g](beta p))^beta vs ||g^beta||_p
  Rng rng(314);
  for (int trial = 0; trial < 30; ++trial) {
    auto X = testutil::random_prob_space(rng, rng.uniform_int(2, 6));
    auto g = testutil::random_fn(rng, X, 0.1, 10.0);
    const double beta = rng.uniform(1.0, 4.0);
    auto psi = natural_from_function(g);
    auto tr = beta_transform(psi, beta);
    auto gb = power_apply(g, beta);
    for (double p : {1.01, 2.0, 5.0, 17.0}) {
      const double lhs = tr(p);
      const double rhs = lp_norm(gb, p);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("natural_from_function") {
  auto X = testutil::space({0.5, 0.5});
  auto f = testutil::fn(X, {1.0, 3.0});
  auto psi = natural_from_function(f);
  CHECK(psi(2.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14)); // (0.5*1 + 0.5*9)^(1/2)

  // unit GLS norm
  CHECK(gls_norm(f, psi).value == doctest::Approx(1.0).epsilon(1e-12));

  // constant function on a probability space: the natural rule is constant
  auto c = testutil::fn(X, {4.0, 4.0});
  auto cpsi = natural_from_function(c);
  for (double p : {1.0 + 1e-9, 2.0, 37.0, 400.0}) CHECK(cpsi(p) == doctest::Approx(4.0));

  // rejects the a.e.-zero function
  auto Z = testutil::space({0.5, 0.0, 0.5});
  CHECK_THROWS_AS(natural_from_function(testutil::fn(Z, {0.0, 9.0, 0.0})),
                  std::invalid_argument);
}

TEST_CASE("natural rule is nondecreasing in p on probability spaces") {
  Rng rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    auto X = testutil::random_prob_space(rng, rng.uniform_int(2, 6));
    auto f = testutil::random_fn(rng, X, 0.01, 50.0);
    auto psi = natural_from_function(f);
    double prev = 0.0;
    for (int i = 0; i < 30; ++i) {
      const double p = std::exp(std::log(1.0 + 1e-6) + i * 0.2);
      const double v = psi(p);
      CHECK(v >= prev * (1.0 - 1e-12));
      prev = v;
    }
  }

  // strictly increasing when the function is non-constant
  auto X = testutil::space({0.5, 0.5});
  auto psi = natural_from_function(testutil::fn(X, {1.0, 3.0}));
  CHECK(psi(2.0) > psi(1.5) * (1.0 + 1e-6));
  CHECK(psi(8.0) > psi(2.0) * (1.0 + 1e-6));
}

TEST_CASE("positivity on the declared support, sentinel outside") {
  auto X = testutil::space({0.25, 0.75});
  auto psi = natural_from_function(testutil::fn(X, {0.5, 2.0}), {2.0, 32.0});
  for (double p : {2.0 + 1e-9, 3.0, 31.0}) {
    CHECK(std::isfinite(psi(p)));
    CHECK(psi(p) > 0.0);
  }
  CHECK(psi(1.5) == kInf);
  CHECK(psi(32.0) == kInf);
  CHECK(psi(100.0) == kInf);
}

TEST_CASE("tabulated rules interpolate log-log and refuse extrapolation") {
  auto tab = make_tabulated({2.0, 8.0}, {4.0, 64.0});
  // log-linear between the nodes: value(4) = exp(log4 + t*(log64-log4)), t = 1/2
  CHECK(tab(4.0) == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(tab(1.5) == kInf);
  CHECK(tab(9.0) == kInf);
  CHECK_THROWS_AS(make_tabulated({1.0}, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_tabulated({1.0, 0.5}, {2.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_tabulated({1.0, 2.0}, {2.0, -1.0}), std::invalid_argument);
}

TEST_CASE("limit values at the right end") {
  GeneratingFunction c(GeneratingFunction::Constant{2.0}, {1.0, kInf});
  CHECK(c.limit_at_sup() == 2.0);
  GeneratingFunction grows(GeneratingFunction::Power{1.0, 0.5}, {1.0, kInf});
  CHECK(*grows.limit_at_sup() == kInf);
  GeneratingFunction decays(GeneratingFunction::Power{1.0, -0.5}, {1.0, kInf});
  CHECK(*decays.limit_at_sup() == 0.0);
  auto X = testutil::space({0.5, 0.5});
  auto nat = natural_from_function(testutil::fn(X, {1.0, 3.0}));
  CHECK(*nat.limit_at_sup() == doctest::Approx(3.0)); // essential sup
}

TEST_CASE("exponent cap substitutes the limit value") {
  auto X = testutil::space({0.5, 0.5});
  auto nat = natural_from_function(testutil::fn(X, {1.0, 3.0}));
  CHECK(nat.eval_capped(1e7) == doctest::Approx(3.0));
  CHECK(nat.eval_capped(kInf) == doctest::Approx(3.0));
  GeneratingFunction bounded(GeneratingFunction::Constant{1.0}, {1.0, 4.0});
  CHECK(bounded.eval_capped(1e7) == kInf);
}

TEST_CASE("config round trip") {
  json doc = {
      {"spaces", {{{"label", "X"}, {"weights", {0.5, 0.5}}}}},
      {"functions", {{{"label", "g"}, {"space", "X"}, {"values", {1.0, 3.0}}}}},
      {"kernels",
       {{{"label", "h"}, {"space_x", "X"}, {"space_y", "X"}, {"entries", {{1.0, 2.0}, {3.0, 4.0}}}}}},
  };
  auto inst = Instance::from_json(doc);

  auto cfg = json{{"kind", "natural"}, {"function", "g"}, {"support", {1.0, "inf"}}};
  auto psi = generating_from_config(cfg, inst);
  CHECK(psi(2.0) == doctest::Approx(std::sqrt(5.0)));

  auto c = generating_from_config(json{{"kind", "constant"}, {"value", 2.5}}, inst);
  CHECK(c(9.0) == doctest::Approx(2.5));

  auto pw = generating_from_config(
      json{{"kind", "power"}, {"scale", 2.0}, {"gamma", 1.0}, {"support", {1.0, 8.0}}}, inst);
  CHECK(pw(2.0) == doctest::Approx(4.0));
  CHECK(pw(9.0) == kInf);

  auto tab = generating_from_config(
      json{{"kind", "tabulated"}, {"p", {2.0, 8.0}}, {"values", {4.0, 64.0}}}, inst);
  CHECK(tab(4.0) == doctest::Approx(16.0));

  auto tau = generating2_from_config(json{{"kind", "natural2"}, {"kernel", "h"}}, inst);
  CHECK(tau(2.0, 3.0) == doctest::Approx(mixed_norm(inst.kernel("h"), 2.0, 3.0)));

  CHECK_THROWS_AS(generating_from_config(json{{"kind", "mystery"}}, inst),
                  std::invalid_argument);
}

TEST_CASE("bivariate sentinel and cap") {
  auto X = testutil::space({0.5, 0.5}, "X");
  auto Y = testutil::space({0.25, 0.75}, "Y");
  Kernel2 h(X, Y, {{1.0, 3.0}, {2.0, 2.0}});
  auto tau = natural_from_kernel(h);
  CHECK(std::isfinite(tau(2.0, 2.0)));
  CHECK_THROWS_AS(tau(0.5, 2.0), std::invalid_argument);
  CHECK(tau.eval_capped(1e7, 2.0) == doctest::Approx(mixed_norm(h, kInf, 2.0)));
  CHECK(tau.eval_capped(2.0, 1e7) == doctest::Approx(mixed_norm(h, 2.0, kInf)));

  GeneratingFunction2 c2(GeneratingFunction2::Constant2{1.5}, {1.0, 4.0}, {1.0, kInf});
  CHECK(c2(5.0, 2.0) == kInf);
  CHECK(c2(2.0, 2.0) == doctest::Approx(1.5));
  CHECK(c2.eval_capped(1e7, 2.0) == kInf); // the q support is bounded
}
