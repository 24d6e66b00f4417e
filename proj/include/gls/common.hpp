#ifndef GLS_COMMON_HPP
#define GLS_COMMON_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gls {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Conjugate exponents q = pr/(p-r) blow up as p -> r+.  Above this cap the
// exponent is treated as infinite and the essential-sup norm (or the
// generating function's limit value) is substituted.  On finite discrete
// spaces that substitution is the true limit.
inline constexpr double kExponentCap = 1e6;

// Largest exponent the default evaluation grids reach when an interval is
// unbounded on the right.
inline constexpr double kGridCap = 512.0;

/// Open interval (lo, hi), 1 <= lo < hi <= inf, used as generating-function
/// support.  Membership is strict on both sides.
struct Interval {
  double lo = 1.0;
  double hi = kInf;

  bool contains(double p) const { return p > lo && p < hi; }
  bool unbounded() const { return std::isinf(hi); }
};

inline Interval intersect(const Interval& a, const Interval& b) {
  return Interval{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

/// Raised when a supremum ratio diverges as p grows (the generating function
/// vanishes in the limit while the norm does not).
class UnboundedNormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the open-domain infimum searches when no sampled point is finite.
class EverywhereInfinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the bound tabulations when every grid point is infinite.
class NowhereFinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

} // namespace gls

#endif
