#include "relosc/oracle/grid_function.hpp"

#include <cmath>

#include "relosc/errors.hpp"

namespace relosc::oracle {

GridFunction::GridFunction(double lo, double hi, std::vector<double> values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
  if (values_.size() < 3) throw ParameterError("grid function needs at least 3 points");
  if (!(std::isfinite(lo) && std::isfinite(hi) && hi > lo)) {
    throw ParameterError("grid function needs finite lo < hi");
  }
}

bool GridFunction::same_grid(const GridFunction& other) const noexcept {
  return lo_ == other.lo_ && hi_ == other.hi_ && size() == other.size();
}

double grid_inner_product(const GridFunction& f, const GridFunction& g) {
  if (!f.same_grid(g)) throw ParameterError("inner product of functions on different grids");
  const std::size_t n = f.size();
  double sum = 0.5 * (f[0] * g[0] + f[n - 1] * g[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) sum += f[i] * g[i];
  return sum * f.step();
}

}  // namespace relosc::oracle
