#ifndef GLS_RNG_HPP
#define GLS_RNG_HPP

#include <cstdint>
#include <random>

namespace gls {

/// Deterministic random source.  The mt19937_64 stream is fixed by the
/// standard and the uniform mappings below avoid std::*_distribution, whose
/// output is implementation-defined; identical seeds therefore reproduce
/// identical values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi] via rejection-free modulo of a wide draw.
  int uniform_int(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

} // namespace gls

#endif
