#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace relosc::oracle {

/// Samples on the uniform grid x_i = lo + i h, h = (hi - lo)/(N - 1), N >= 3.
class GridFunction {
 public:
  GridFunction(double lo, double hi, std::vector<double> values);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return values_.size(); }
  double step() const noexcept { return (hi_ - lo_) / static_cast<double>(size() - 1); }
  double x(std::size_t i) const noexcept { return lo_ + static_cast<double>(i) * step(); }

  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  /// Same endpoints and point count.
  bool same_grid(const GridFunction& other) const noexcept;

 private:
  double lo_;
  double hi_;
  std::vector<double> values_;
};

/// Composite trapezoid sum of f * g. Throws ParameterError when the grids differ.
double grid_inner_product(const GridFunction& f, const GridFunction& g);

}  // namespace relosc::oracle
