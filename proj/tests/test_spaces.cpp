#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "gls/instance.hpp"
#include "gls/spaces.hpp"

#include "helpers.hpp"

using namespace gls;
using nlohmann::json;

TEST_CASE("total_mass") {
  CHECK(total_mass(*testutil::space({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(total_mass(*testutil::space({0.0, 2.0, 3.0})) == doctest::Approx(5.0));
  CHECK(total_mass(*testutil::space({1.0})) == doctest::Approx(1.0));
}

TEST_CASE("total_mass is additive under concatenation") {
  Rng rng(901);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(static_cast<std::size_t>(rng.uniform_int(1, 6)));
    std::vector<double> b(static_cast<std::size_t>(rng.uniform_int(1, 6)));
    for (auto& x : a) x = rng.uniform(0.0, 2.0);
    for (auto& x : b) x = rng.uniform(0.0, 2.0);
    a[0] += 0.5; // keep both non-trivial
    b[0] += 0.5;
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const double sum = total_mass(*testutil::space(a)) + total_mass(*testutil::space(b));
    CHECK(total_mass(*testutil::space(ab)) == doctest::Approx(sum).epsilon(1e-14));
  }
}

TEST_CASE("MeasureSpace rejects invalid weights") {
  CHECK_THROWS_AS(MeasureSpace("X", {}), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpace("X", {1.0, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpace("X", {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpace("X", {1.0, kInf}), std::invalid_argument);
}

TEST_CASE("GridFunction invariants") {
  auto X = testutil::space({0.5, 0.5});
  CHECK_THROWS_AS(GridFunction(X, {1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction(X, {1.0, kInf}), std::invalid_argument);
  GridFunction f(X, {-1.0, 2.0});
  CHECK(f.max_abs_on_support() == doctest::Approx(2.0));
}

TEST_CASE("max_abs ignores zero-weight atoms") {
  auto X = testutil::space({0.5, 0.0, 0.5});
  GridFunction f(X, {1.0, 100.0, 2.0});
  CHECK(f.max_abs_on_support() == doctest::Approx(2.0));
}

TEST_CASE("Kernel2 shape checks and rows") {
  auto X = testutil::space({0.5, 0.5}, "X");
  auto Y = testutil::space({0.25, 0.75}, "Y");
  CHECK_THROWS_AS(Kernel2(X, Y, {{1.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Kernel2(X, Y, {{1.0}, {2.0}}), std::invalid_argument);
  Kernel2 h(X, Y, {{1.0, 3.0}, {2.0, 2.0}});
  CHECK(h.entry(0, 1) == doctest::Approx(3.0));
  auto row = h.row(1);
  CHECK(row.value(0) == doctest::Approx(2.0));
  CHECK(&row.space() == Y.get());
}

TEST_CASE("scalar map presets") {
  auto X = testutil::space({0.5, 0.5});
  auto pw = ScalarMap2::power(2.0, 3.0);
  CHECK(pw(0, -2.0) == doctest::Approx(16.0));
  auto af = ScalarMap2::affine(1.0, 2.0);
  CHECK(af(1, 3.0) == doctest::Approx(7.0));
  auto prod = ScalarMap2::product_power(GridFunction(X, {2.0, 1.0}), 2.0);
  CHECK(prod(0, 3.0) == doctest::Approx(18.0));
  CHECK(prod(1, 3.0) == doctest::Approx(9.0));
  auto u = ScalarMap3::kernel_power(Kernel2(X, X, {{1.0, 2.0}, {3.0, 4.0}}), 1.0);
  CHECK(u(1, 0, -2.0) == doctest::Approx(6.0));
}

TEST_CASE("validate_instance: consistent two-atom instance") {
  json doc = {
      {"spaces", {{{"label", "X"}, {"weights", {0.5, 0.5}}}}},
      {"functions", {{{"label", "g"}, {"space", "X"}, {"values", {1.0, 2.0}}}}},
      {"kernels", json::array()},
      {"maps", json::array()},
  };
  CHECK(validate_instance(doc).empty());
  auto inst = Instance::from_json(doc);
  CHECK(inst.function("g").value(1) == doctest::Approx(2.0));
}

TEST_CASE("validate_instance: shape violation") {
  json doc = {
      {"spaces", {{{"label", "X"}, {"weights", {0.5, 0.5}}}}},
      {"functions", {{{"label", "g"}, {"space", "X"}, {"values", {1.0, 2.0, 3.0}}}}},
  };
  auto v = validate_instance(doc);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("g") != std::string::npos);
  CHECK_THROWS_AS(Instance::from_json(doc), std::invalid_argument);
}

TEST_CASE("validate_instance: negative weight") {
  json doc = {{"spaces", {{{"label", "X"}, {"weights", {0.5, -1.0}}}}}};
  auto v = validate_instance(doc);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("negative") != std::string::npos);
}

TEST_CASE("validate_instance rejects duplicate labels") {
  json doc = {
      {"spaces", {{{"label", "X"}, {"weights", {0.5, 0.5}}}}},
      {"functions",
       {{{"label", "g"}, {"space", "X"}, {"values", {1.0, 2.0}}},
        {{"label", "g"}, {"space", "X"}, {"values", {3.0, 4.0}}}}},
  };
  auto v = validate_instance(doc);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("duplicate") != std::string::npos);
}

TEST_CASE("validate_instance matches constructor success") {
  // empty violation list <=> construction succeeds
  for (const json doc : {
           json{{"spaces", {{{"label", "X"}, {"weights", {0.0, 0.0}}}}}},
           json{{"spaces", {{{"label", "X"}, {"weights", {1.0}}}}},
                {"kernels",
                 {{{"label", "h"}, {"space_x", "X"}, {"space_y", "nope"}, {"entries", {{1.0}}}}}}},
           json{{"spaces", {{{"label", "X"}, {"weights", {1.0}}}}},
                {"maps", {{{"label", "n"}, {"kind", "mystery"}}}}},
       }) {
    CHECK(!validate_instance(doc).empty());
    CHECK_THROWS(Instance::from_json(doc));
  }
}

TEST_CASE("instance maps round-trip through json") {
  json doc = {
      {"spaces", {{{"label", "X"}, {"weights", {0.5, 0.5}}}}},
      {"functions", {{{"label", "phi"}, {"space", "X"}, {"values", {2.0, 1.0}}}}},
      {"maps",
       {{{"label", "n"},
         {"kind", "product_power"},
         {"params", {{"phi", "phi"}, {"beta", 2.0}}}}}},
  };
  auto inst = Instance::from_json(doc);
  CHECK(inst.map2("n")(0, 3.0) == doctest::Approx(18.0));
  CHECK(inst.raw() == doc);
}
