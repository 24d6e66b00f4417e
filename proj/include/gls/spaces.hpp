#ifndef GLS_SPACES_HPP
#define GLS_SPACES_HPP

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gls/common.hpp"

namespace gls {

/// A finite atomic measure space: a set of atoms with nonnegative weights.
/// At least one weight must be strictly positive.  Zero-weight atoms model
/// null sets; norm code skips them in essential suprema.
class MeasureSpace {
 public:
  MeasureSpace(std::string label, std::vector<double> weights);

  const std::string& label() const { return label_; }
  int atom_count() const { return static_cast<int>(weights_.size()); }
  double weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  std::span<const double> weights() const { return weights_; }

 private:
  std::string label_;
  std::vector<double> weights_;
};

using SpacePtr = std::shared_ptr<const MeasureSpace>;

/// Sum of atom weights.
double total_mass(const MeasureSpace& space);

/// One real value per atom of a measure space.
class GridFunction {
 public:
  GridFunction(SpacePtr space, std::vector<double> values);

  const MeasureSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  int size() const { return static_cast<int>(values_.size()); }
  double value(int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const double> values() const { return values_; }

  /// Largest |value| over atoms of positive weight; 0 if none.
  double max_abs_on_support() const;

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

/// A two-index weight matrix over X x Y, row-major.
class Kernel2 {
 public:
  Kernel2(SpacePtr space_x, SpacePtr space_y, std::vector<std::vector<double>> entries);

  const MeasureSpace& space_x() const { return *space_x_; }
  const MeasureSpace& space_y() const { return *space_y_; }
  const SpacePtr& space_x_ptr() const { return space_x_; }
  const SpacePtr& space_y_ptr() const { return space_y_; }
  double entry(int x, int y) const {
    return entries_[static_cast<std::size_t>(x) * ny_ + static_cast<std::size_t>(y)];
  }

  /// The y-slice h(x, .) as a GridFunction on Y.
  GridFunction row(int x) const;

  Kernel2 scaled(double c) const;

 private:
  SpacePtr space_x_, space_y_;
  std::size_t ny_;
  std::vector<double> entries_;
};

/// Deterministic scalar rule (atom index, z) -> real.  Named presets cover
/// the maps the bound machinery needs; arbitrary rules plug in via
/// from_function.
class ScalarMap2 {
 public:
  double operator()(int x, double z) const { return eval_(x, z); }
  const std::string& label() const { return label_; }

  static ScalarMap2 power(double c, double beta, std::string label = "power");
  static ScalarMap2 affine(double a, double b, std::string label = "affine");
  static ScalarMap2 product_power(GridFunction phi, double beta,
                                  std::string label = "product_power");
  static ScalarMap2 zero(std::string label = "zero");
  static ScalarMap2 from_function(std::function<double(int, double)> fn, std::string label);

 private:
  ScalarMap2(std::function<double(int, double)> fn, std::string label)
      : eval_(std::move(fn)), label_(std::move(label)) {}
  std::function<double(int, double)> eval_;
  std::string label_;
};

/// Deterministic scalar rule (x atom, y atom, z) -> real.
class ScalarMap3 {
 public:
  double operator()(int x, int y, double z) const { return eval_(x, y, z); }
  const std::string& label() const { return label_; }

  static ScalarMap3 kernel_power(Kernel2 u0, double beta, std::string label = "kernel_power");
  static ScalarMap3 power(double c, double beta, std::string label = "power");
  static ScalarMap3 affine(double a, double b, std::string label = "affine");
  static ScalarMap3 from_function(std::function<double(int, int, double)> fn, std::string label);

 private:
  ScalarMap3(std::function<double(int, int, double)> fn, std::string label)
      : eval_(std::move(fn)), label_(std::move(label)) {}
  std::function<double(int, int, double)> eval_;
  std::string label_;
};

} // namespace gls

#endif
