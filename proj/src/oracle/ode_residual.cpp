#include "relosc/oracle/ode_residual.hpp"

#include <algorithm>
#include <cmath>

#include "relosc/errors.hpp"
#include "relosc/geometry.hpp"

namespace relosc::oracle {

double ode_residual(const ModelParams& params, const std::function<double(double)>& u,
                    double energy, double lo, double hi, unsigned samples) {
  if (samples == 0 || !(hi > lo)) throw ParameterError("ode_residual needs samples over lo < hi");
  const double h = 1e-4 * 0.5 * (hi - lo);
  const double spacing = (hi - lo) / (samples + 1.0);
  if (spacing <= 2.0 * h) throw ParameterError("ode_residual: too many samples for the stencil");
  const double shift = energy * energy - params.m() * params.m();

  double worst = 0.0;
  double peak = 0.0;
  for (unsigned i = 1; i <= samples; ++i) {
    const double x = lo + i * spacing;
    const double u0 = u(x);
    const double d2 =
        (-u(x + 2 * h) + 16.0 * u(x + h) - 30.0 * u0 + 16.0 * u(x - h) - u(x - 2 * h)) /
        (12.0 * h * h);
    const double r = -d2 + (potential(params, x) - shift) * u0;
    worst = std::max(worst, std::fabs(r));
    peak = std::max(peak, std::fabs(u0));
  }
  if (!(peak > 0.0)) throw NumericalError("ode_residual: function vanishes at all samples", 0.0);
  return worst / peak;
}

}  // namespace relosc::oracle
