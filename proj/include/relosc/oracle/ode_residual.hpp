#pragma once

#include <functional>

#include "relosc/model.hpp"

namespace relosc::oracle {

/// max |-u'' + V u - (E^2 - m^2) u| / max |u| over `samples` interior points
/// of (lo, hi), with u'' from a 5-point stencil at step 1e-4 * (hi - lo)/2.
double ode_residual(const ModelParams& params, const std::function<double(double)>& u,
                    double energy, double lo, double hi, unsigned samples = 64);

}  // namespace relosc::oracle
