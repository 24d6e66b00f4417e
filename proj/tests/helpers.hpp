#ifndef GLS_TESTS_HELPERS_HPP
#define GLS_TESTS_HELPERS_HPP

#include <memory>
#include <vector>

#include "gls/rng.hpp"
#include "gls/spaces.hpp"

namespace testutil {

inline gls::SpacePtr space(std::vector<double> weights, std::string label = "X") {
  return std::make_shared<gls::MeasureSpace>(std::move(label), std::move(weights));
}

inline gls::GridFunction fn(gls::SpacePtr sp, std::vector<double> values) {
  return gls::GridFunction(std::move(sp), std::move(values));
}

/// Random probability space with n atoms.
inline gls::SpacePtr random_prob_space(gls::Rng& rng, int n, std::string label = "X") {
  std::vector<double> w(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (auto& x : w) {
    x = rng.uniform(0.1, 1.0);
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return space(std::move(w), std::move(label));
}

inline gls::SpacePtr random_space(gls::Rng& rng, int n, std::string label = "X") {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (auto& x : w) x = rng.uniform(0.05, 2.0);
  return space(std::move(w), std::move(label));
}

inline gls::GridFunction random_fn(gls::Rng& rng, gls::SpacePtr sp, double lo = 1e-3,
                                   double hi = 1e3) {
  std::vector<double> v(static_cast<std::size_t>(sp->atom_count()));
  for (auto& x : v) x = rng.uniform(lo, hi);
  return gls::GridFunction(std::move(sp), std::move(v));
}

} // namespace testutil

#endif
