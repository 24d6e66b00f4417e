#include "gls/spaces.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gls {

namespace {

bool all_finite(std::span<const double> xs) {
  for (double x : xs)
    if (!std::isfinite(x)) return false;
  return true;
}

} // namespace

MeasureSpace::MeasureSpace(std::string label, std::vector<double> weights)
    : label_(std::move(label)), weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::invalid_argument("MeasureSpace '" + label_ + "': no atoms");
  bool any_positive = false;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument("MeasureSpace '" + label_ +
                                  "': weights must be finite and nonnegative");
    if (w > 0.0) any_positive = true;
  }
  if (!any_positive)
    throw std::invalid_argument("MeasureSpace '" + label_ + "': measure is trivial");
}

double total_mass(const MeasureSpace& space) {
  double sum = 0.0;
  for (double w : space.weights()) sum += w;
  return sum;
}

GridFunction::GridFunction(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw std::invalid_argument("GridFunction: null space");
  if (static_cast<int>(values_.size()) != space_->atom_count())
    throw std::invalid_argument("GridFunction on '" + space_->label() +
                                "': value count does not match atom count");
  if (!all_finite(values_))
    throw std::invalid_argument("GridFunction on '" + space_->label() +
                                "': values must be finite");
}

double GridFunction::max_abs_on_support() const {
  double m = 0.0;
  for (int i = 0; i < size(); ++i)
    if (space_->weight(i) > 0.0) m = std::max(m, std::fabs(values_[static_cast<std::size_t>(i)]));
  return m;
}

Kernel2::Kernel2(SpacePtr space_x, SpacePtr space_y, std::vector<std::vector<double>> entries)
    : space_x_(std::move(space_x)), space_y_(std::move(space_y)) {
  if (!space_x_ || !space_y_) throw std::invalid_argument("Kernel2: null space");
  ny_ = static_cast<std::size_t>(space_y_->atom_count());
  if (static_cast<int>(entries.size()) != space_x_->atom_count())
    throw std::invalid_argument("Kernel2: row count does not match X atom count");
  entries_.reserve(entries.size() * ny_);
  for (const auto& row : entries) {
    if (row.size() != ny_)
      throw std::invalid_argument("Kernel2: column count does not match Y atom count");
    if (!all_finite(row)) throw std::invalid_argument("Kernel2: entries must be finite");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

GridFunction Kernel2::row(int x) const {
  std::vector<double> vals(ny_);
  for (std::size_t y = 0; y < ny_; ++y) vals[y] = entry(x, static_cast<int>(y));
  return GridFunction(space_y_, std::move(vals));
}

Kernel2 Kernel2::scaled(double c) const {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(space_x_->atom_count()));
  for (int x = 0; x < space_x_->atom_count(); ++x) {
    auto& row = rows[static_cast<std::size_t>(x)];
    row.resize(ny_);
    for (std::size_t y = 0; y < ny_; ++y) row[y] = c * entry(x, static_cast<int>(y));
  }
  return Kernel2(space_x_, space_y_, std::move(rows));
}

ScalarMap2 ScalarMap2::power(double c, double beta, std::string label) {
  return ScalarMap2(
      [c, beta](int, double z) { return c * std::pow(std::fabs(z), beta); },
      std::move(label));
}

ScalarMap2 ScalarMap2::affine(double a, double b, std::string label) {
  return ScalarMap2([a, b](int, double z) { return a + b * z; }, std::move(label));
}

ScalarMap2 ScalarMap2::product_power(GridFunction phi, double beta, std::string label) {
  return ScalarMap2(
      [phi = std::move(phi), beta](int x, double z) {
        return phi.value(x) * std::pow(std::fabs(z), beta);
      },
      std::move(label));
}

ScalarMap2 ScalarMap2::zero(std::string label) {
  return ScalarMap2([](int, double) { return 0.0; }, std::move(label));
}

ScalarMap2 ScalarMap2::from_function(std::function<double(int, double)> fn, std::string label) {
  return ScalarMap2(std::move(fn), std::move(label));
}

ScalarMap3 ScalarMap3::kernel_power(Kernel2 u0, double beta, std::string label) {
  return ScalarMap3(
      [u0 = std::move(u0), beta](int x, int y, double z) {
        return u0.entry(x, y) * std::pow(std::fabs(z), beta);
      },
      std::move(label));
}

ScalarMap3 ScalarMap3::power(double c, double beta, std::string label) {
  return ScalarMap3(
      [c, beta](int, int, double z) { return c * std::pow(std::fabs(z), beta); },
      std::move(label));
}

ScalarMap3 ScalarMap3::affine(double a, double b, std::string label) {
  return ScalarMap3([a, b](int, int, double z) { return a + b * z; }, std::move(label));
}

ScalarMap3 ScalarMap3::from_function(std::function<double(int, int, double)> fn,
                                     std::string label) {
  return ScalarMap3(std::move(fn), std::move(label));
}

} // namespace gls
