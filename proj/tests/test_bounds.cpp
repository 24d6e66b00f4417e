#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gls/bounds.hpp"
#include "gls/norms.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gls;

TEST_CASE("infimum_open_1d finds interior minima") {
  auto res = infimum_open_1d([](double p) { return (p - 2.0) * (p - 2.0) + 1.0; }, 1.0, kInf,
                             1e-7);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(res.arg == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(res.converged);
  CHECK(res.evaluations > 0);
}

TEST_CASE("infimum_open_1d detects endpoint limits") {
  auto res = infimum_open_1d([](double p) { return p; }, 3.0, kInf, 1e-7);
  CHECK(res.value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(!res.converged);
}

TEST_CASE("infimum_open_1d everywhere infinite") {
  CHECK_THROWS_AS(infimum_open_1d([](double) { return kInf; }, 1.0, kInf, 1e-7),
                  EverywhereInfinite);
}

TEST_CASE("infimum_open_1d respects finite right endpoints") {
  auto res = infimum_open_1d([](double p) { return -p; }, 1.0, 5.0, 1e-7);
  CHECK(res.value == doctest::Approx(-5.0).epsilon(1e-7));
  CHECK(!res.converged); // limit at the open right endpoint
  CHECK_THROWS_AS(infimum_open_1d([](double p) { return p; }, 3.0, 2.0, 1e-7),
                  std::invalid_argument);
  CHECK_THROWS_AS(infimum_open_1d([](double p) { return p; }, 0.5, 2.0, 1e-7),
                  std::invalid_argument);
  CHECK_THROWS_AS(infimum_open_1d([](double p) { return p; }, 1.0, 2.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("infimum value never exceeds any sample") {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = rng.uniform(0.5, 3.0), b = rng.uniform(1.0, 4.0), c = rng.uniform(1.0, 9.0);
    auto fn = [=](double p) { return a * std::pow(std::log(p) - b, 2.0) + c; };
    auto res = infimum_open_1d(fn, 1.0, kInf, 1e-7);
    for (double p : oracle::axis_samples(1.0, kInf, 500))
      CHECK(res.value <= fn(p) * (1.0 + 1e-12));
  }
}

TEST_CASE("infimum_open_2d") {
  // separable objective: the minimum splits into two 1-D problems
  auto sep = [](double p, double t) {
    return std::pow(std::log(p) - 1.0, 2.0) + std::pow(std::log(t) - 3.0, 2.0) + 2.0;
  };
  auto res = infimum_open_2d(sep, 1.5, 1e-7);
  const double p1 = infimum_open_1d([&](double p) { return std::pow(std::log(p) - 1.0, 2.0); },
                                    1.5, kInf, 1e-7)
                        .value;
  const double t1 = infimum_open_1d([&](double t) { return std::pow(std::log(t) - 3.0, 2.0); },
                                    1.5, kInf, 1e-7)
                        .value;
  CHECK(res.value == doctest::Approx(p1 + t1 + 2.0).epsilon(1e-8));
  CHECK(res.arg_t > res.arg_p);

  auto flat = infimum_open_2d([](double, double) { return 1.0; }, 2.0, 1e-7);
  CHECK(flat.value == doctest::Approx(1.0));

  CHECK_THROWS_AS(infimum_open_2d([](double, double) { return kInf; }, 2.0, 1e-7),
                  EverywhereInfinite);
}

TEST_CASE("HolderTriple closure") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const double r = rng.uniform(1.0, 16.0);
    const double p = r * (1.0 + rng.uniform(1e-4, 20.0));
    auto h = HolderTriple::from_p_r(p, r);
    CHECK(1.0 / h.p + 1.0 / h.q == doctest::Approx(1.0 / h.r).epsilon(1e-14));
  }
  auto inf_q = HolderTriple::from_p_r(2.0, 2.0);
  CHECK(inf_q.q == kInf);
  auto inf_p = HolderTriple::from_p_r(kInf, 3.0);
  CHECK(inf_p.q == doctest::Approx(3.0));
  auto from_q = HolderTriple::from_p_q(4.0, 4.0);
  CHECK(from_q.r == doctest::Approx(2.0));
}

TEST_CASE("HammersteinPoint closure") {
  Rng rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const double r = rng.uniform(1.01, 8.0);
    const double p = r * (1.0 + rng.uniform(1e-3, 8.0));
    const double t = p * (1.0 + rng.uniform(1e-3, 8.0));
    auto pt = HammersteinPoint::from_r_p_t(r, p, t);
    REQUIRE(pt.valid());
    CHECK(1.0 / pt.p + 1.0 / pt.q == doctest::Approx(1.0 / pt.r).epsilon(1e-14));
    CHECK(1.0 / pt.s + 1.0 / pt.t == doctest::Approx(1.0 / pt.p).epsilon(1e-14));
  }
  CHECK(!HammersteinPoint::from_r_p_t(2.0, 1.5, 3.0).valid()); // p <= r
  CHECK(!HammersteinPoint::from_r_p_t(2.0, 3.0, 2.5).valid()); // t <= p
  CHECK(!HammersteinPoint::from_r_p_t(0.9, 2.0, 4.0).valid()); // r <= 1
}

TEST_CASE("w_aux") {
  GeneratingFunction one(GeneratingFunction::Constant{1.0}, {1.0, kInf});
  GeneratingFunction ident(GeneratingFunction::Power{1.0, 1.0}, {1.0, kInf});

  // nu = 1 leaves the psi factor alone
  CHECK(w_aux(ident, one, 2.0, 3.0, 1.5) == doctest::Approx(std::pow(6.0, 2.0)));
  // psi(p) = p, nu = 1, beta = 1, p = 2, r = 1
  CHECK(w_aux(ident, one, 1.0, 2.0, 1.0) == doctest::Approx(2.0));
  // psi outside its support propagates the sentinel
  GeneratingFunction narrow(GeneratingFunction::Constant{1.0}, {1.0, 4.0});
  CHECK(w_aux(narrow, one, 2.0, 3.0, 1.5) == kInf); // beta*p = 6 outside (1,4)
  CHECK_THROWS_AS(w_aux(ident, one, 1.0, 1.5, 2.0), std::invalid_argument); // p <= r
}

TEST_CASE("sentinel product") {
  CHECK(sentinel_product(2.0, 3.0) == doctest::Approx(6.0));
  CHECK(sentinel_product(kInf, 0.0) == kInf);
  CHECK(sentinel_product(0.0, kInf) == kInf);
  CHECK(sentinel_product(kInf, 5.0, 0.5) == kInf);
  CHECK(sentinel_product(2.0, 3.0, 4.0) == doctest::Approx(24.0));
}

TEST_CASE("nemytskii_w tabulation") {
  GeneratingFunction one(GeneratingFunction::Constant{1.0}, {1.0, kInf});
  GeneratingFunction ident(GeneratingFunction::Power{1.0, 1.0}, {1.0, kInf});
  const std::vector<double> grid{1.0, 1.4, 2.0, 3.3, 5.0};

  // psi = nu = 1: W is identically 1
  auto flat = nemytskii_w(one, one, 2.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(flat.value[i] == doctest::Approx(1.0));

  // psi(p) = p, nu = 1, beta = 1: the infimum of p over (r, inf) is r
  auto linear = nemytskii_w(ident, one, 1.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(linear.value[i] == doctest::Approx(grid[i]).epsilon(1e-6));

  // nondecreasing psi with nu = 1: W(r) = psi(beta r)^beta at the left limit
  Rng rng(71);
  auto X = testutil::random_prob_space(rng, 5);
  auto g = testutil::random_fn(rng, X, 0.2, 5.0);
  auto psi = natural_from_function(g);
  const double beta = 1.7;
  auto nat = nemytskii_w(psi, one, beta, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(nat.value[i] ==
          doctest::Approx(std::pow(psi(beta * grid[i] * (1.0 + 1e-12)), beta)).epsilon(1e-7));
}

TEST_CASE("nemytskii_w discovers the finiteness segment") {
  // psi supported on (1, 4): W_a needs beta*p < 4, i.e. p < 2, so W(r) is
  // finite only for r < 2.
  GeneratingFunction narrow(GeneratingFunction::Constant{1.0}, {1.0, 4.0});
  GeneratingFunction one(GeneratingFunction::Constant{1.0}, {1.0, kInf});
  auto t = nemytskii_w(narrow, one, 2.0, {1.1, 1.5, 1.9, 2.5, 3.5});
  CHECK(t.finite_at(0));
  CHECK(t.finite_at(1));
  CHECK(t.finite_at(2));
  CHECK(!t.finite_at(3));
  CHECK(!t.finite_at(4));
  auto gf = t.to_generating_function();
  CHECK(gf.support().lo == doctest::Approx(1.1));
  CHECK(gf.support().hi == doctest::Approx(1.9));

  GeneratingFunction tiny(GeneratingFunction::Constant{1.0}, {1.0, 1.05});
  CHECK_THROWS_AS(nemytskii_w(tiny, one, 4.0, {2.0, 3.0}), NowhereFinite);
}

TEST_CASE("nemytskii_w never exceeds w_aux") {
  Rng rng(73);
  auto X = testutil::random_prob_space(rng, 4);
  auto g = testutil::random_fn(rng, X, 0.3, 4.0);
  auto phi = testutil::random_fn(rng, X, 0.3, 4.0);
  auto psi = natural_from_function(g);
  auto nu = natural_from_function(phi);
  const double beta = 2.2;
  const std::vector<double> grid{1.2, 2.0, 3.5};
  auto table = nemytskii_w(psi, nu, beta, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int k = 0; k < 40; ++k) {
      const double p = grid[i] * (1.0 + std::exp(rng.uniform(-8.0, 3.0)));
      CHECK(table.value[i] <= w_aux(psi, nu, beta, p, grid[i]) * (1.0 + 1e-7) + 1e-12);
    }
  }
}

TEST_CASE("kappa") {
  auto X = testutil::space({0.5, 0.5}, "X");
  auto Y = testutil::space({0.5, 0.5}, "Y");
  Kernel2 ones(X, Y, {{1.0, 1.0}, {1.0, 1.0}});
  for (double q : {1.0, 3.0, kInf})
    for (double r : {1.0, 2.0, kInf}) CHECK(kappa(ones, q, r) == doctest::Approx(1.0));

  Kernel2 h(X, Y, {{1.0, 3.0}, {2.0, 2.0}});
  CHECK(kappa(h, 1.0, kInf) == doctest::Approx(2.0));
  auto h3 = h.scaled(3.0);
  CHECK(kappa(h3, 2.0, 3.0) == doctest::Approx(3.0 * kappa(h, 2.0, 3.0)).epsilon(1e-14));
}

TEST_CASE("urysohn_theta") {
  auto X = testutil::space({0.5, 0.5}, "X");
  auto Y = testutil::space({0.25, 0.75}, "Y");
  Kernel2 ones(X, Y, {{1.0, 1.0}, {1.0, 1.0}});
  GeneratingFunction one(GeneratingFunction::Constant{1.0}, {1.0, kInf});
  GeneratingFunction ident(GeneratingFunction::Power{1.0, 1.0}, {1.0, kInf});
  const std::vector<double> grid{1.3, 2.0, 4.0};

  auto flat = urysohn_theta(one, ones, 3.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(flat.value[i] == doctest::Approx(1.0));

  // psi(p) = p, unit kernel, beta = 1: theta(r) = r
  auto linear = urysohn_theta(ident, ones, 1.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(linear.value[i] == doctest::Approx(grid[i]).epsilon(1e-6));

  // homogeneity in the kernel
  Rng rng(79);
  std::vector<std::vector<double>> entries(2);
  for (auto& row : entries) {
    row.resize(2);
    for (auto& v : row) v = rng.uniform(0.2, 3.0);
  }
  Kernel2 u0(X, Y, entries);
  auto base = urysohn_theta(ident, u0, 1.5, grid);
  auto scaled = urysohn_theta(ident, u0.scaled(4.0), 1.5, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(scaled.value[i] == doctest::Approx(4.0 * base.value[i]).epsilon(1e-10));
}

TEST_CASE("upsilon") {
  UpsilonFactors unit;
  unit.kernel_factor = [](double, double) { return 1.0; };
  unit.phi_factor = [](double) { return 1.0; };
  unit.g_beta_factor = [](double) { return 1.0; };
  auto pt = HammersteinPoint::from_r_p_t(1.5, 2.5, 6.0);
  CHECK(upsilon(pt, unit) == doctest::Approx(1.0));

  UpsilonFactors doubled = unit;
  doubled.g_beta_factor = [](double) { return 4.0; }; // ||(2g)^beta||_t = 2^beta ||g^beta||_t
  CHECK(upsilon(pt, doubled) == doctest::Approx(4.0));

  CHECK_THROWS_AS(upsilon(HammersteinPoint::from_r_p_t(2.0, 1.5, 3.0), unit),
                  std::invalid_argument);

  UpsilonFactors with_inf = unit;
  with_inf.phi_factor = [](double) { return kInf; };
  CHECK(upsilon(pt, with_inf) == kInf);
}

TEST_CASE("upsilon on an all-ones probability instance") {
  auto X = testutil::space({0.5, 0.5}, "X");
  auto Y = testutil::space({0.25, 0.25, 0.25, 0.25}, "Y");
  Kernel2 h(X, Y, {{1, 1, 1, 1}, {1, 1, 1, 1}});
  auto phi = testutil::fn(Y, {1, 1, 1, 1});
  auto g_beta = power_apply(testutil::fn(Y, {1, 1, 1, 1}), 2.0);
  UpsilonFactors raw;
  raw.kernel_factor = [&](double q, double r) {
    return mixed_norm(h, q > kExponentCap ? kInf : q, r);
  };
  raw.phi_factor = [&](double s) { return lp_norm(phi, s > kExponentCap ? kInf : s); };
  raw.g_beta_factor = [&](double t) { return lp_norm(g_beta, t > kExponentCap ? kInf : t); };
  Rng rng(83);
  for (int k = 0; k < 50; ++k) {
    const double r = rng.uniform(1.05, 4.0);
    const double p = r * (1.0 + rng.uniform(0.01, 5.0));
    const double t = p * (1.0 + rng.uniform(0.01, 5.0));
    CHECK(upsilon(HammersteinPoint::from_r_p_t(r, p, t), raw) == doctest::Approx(1.0));
  }
}

TEST_CASE("hammerstein_delta") {
  UpsilonFactors unit;
  unit.kernel_factor = [](double, double) { return 1.0; };
  unit.phi_factor = [](double) { return 1.0; };
  unit.g_beta_factor = [](double) { return 1.0; };
  const std::vector<double> grid{1.3, 2.0, 3.0};
  auto flat = hammerstein_delta(unit, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(flat.value[i] == doctest::Approx(1.0));

  // Delta(r) <= upsilon(r; p, t) on sampled admissible points
  auto X = testutil::space({0.5, 0.5}, "X");
  auto Y = testutil::space({0.25, 0.75}, "Y");
  Rng rng(89);
  std::vector<std::vector<double>> entries(2);
  for (auto& row : entries) {
    row.resize(2);
    for (auto& v : row) v = rng.uniform(0.2, 3.0);
  }
  Kernel2 h(X, Y, entries);
  auto phi = testutil::random_fn(rng, Y, 0.2, 3.0);
  auto g_beta = power_apply(testutil::random_fn(rng, Y, 0.2, 3.0), 1.8);
  UpsilonFactors raw;
  raw.kernel_factor = [&](double q, double r) {
    return mixed_norm(h, q > kExponentCap ? kInf : q, r);
  };
  raw.phi_factor = [&](double s) { return lp_norm(phi, s > kExponentCap ? kInf : s); };
  raw.g_beta_factor = [&](double t) { return lp_norm(g_beta, t > kExponentCap ? kInf : t); };
  auto table = hammerstein_delta(raw, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    REQUIRE(table.finite_at(i));
    for (int k = 0; k < 3400; ++k) {
      const double p = grid[i] * (1.0 + std::exp(rng.uniform(-7.0, 3.0)));
      const double t = p * (1.0 + std::exp(rng.uniform(-7.0, 3.0)));
      auto pt = HammersteinPoint::from_r_p_t(grid[i], p, t);
      if (!pt.valid()) continue;
      CHECK(table.value[i] <= upsilon(pt, raw) * (1.0 + 1e-7) + 1e-12);
    }
  }

  CHECK_THROWS_AS(hammerstein_delta(unit, std::vector<double>{0.9}), std::invalid_argument);
}

TEST_CASE("tabulated infima agree with the dense-grid oracle") {
  Rng rng(97);
  // Nemytskii W objectives
  for (int trial = 0; trial < 6; ++trial) {
    auto X = testutil::random_prob_space(rng, rng.uniform_int(2, 5));
    auto g = testutil::random_fn(rng, X, 0.2, 3.0);
    auto phi = testutil::random_fn(rng, X, 0.2, 3.0);
    auto psi = natural_from_function(g);
    auto nu = natural_from_function(phi);
    const double beta = rng.uniform(1.0, 3.0);
    const double r = rng.uniform(1.05, 4.0);
    auto table = nemytskii_w(psi, nu, beta, {r});
    const double dense =
        oracle::dense_min_1d([&](double p) { return w_aux(psi, nu, beta, p, r); }, r, kInf);
    CHECK(table.value[0] == doctest::Approx(dense).epsilon(1e-6));
  }
  // Urysohn theta objectives
  for (int trial = 0; trial < 6; ++trial) {
    auto X = testutil::random_prob_space(rng, 3, "X");
    auto Y = testutil::random_prob_space(rng, 3, "Y");
    std::vector<std::vector<double>> entries(3);
    for (auto& row : entries) {
      row.resize(3);
      for (auto& v : row) v = rng.uniform(0.2, 3.0);
    }
    Kernel2 u0(X, Y, entries);
    auto g = testutil::random_fn(rng, Y, 0.2, 3.0);
    auto psi = natural_from_function(g);
    const double beta = rng.uniform(1.0, 2.5);
    const double r = rng.uniform(1.1, 4.0);
    auto table = urysohn_theta(psi, u0, beta, {r});
    auto objective = [&](double p) {
      const double q = p * r / (p - r);
      return sentinel_product(std::pow(psi(beta * p), beta),
                              kappa(u0, q > kExponentCap ? kInf : q, r));
    };
    CHECK(table.value[0] ==
          doctest::Approx(oracle::dense_min_1d(objective, r, kInf)).epsilon(1e-6));
  }
}
