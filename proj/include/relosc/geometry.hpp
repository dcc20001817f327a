#pragma once

#include "relosc/model.hpp"

namespace relosc {

/// Conformal-coordinate domain. Infinite ends are +/-infinity.
struct Domain {
  double lo;
  double hi;

  bool contains(double xhat) const noexcept { return lo < xhat && xhat < hi; }
  bool bounded() const noexcept;
};

Domain domain(const ModelParams& params);

struct MetricComponents {
  double g00;
  double g11;
};

/// Static metric of the family in the original coordinate x.
/// Throws DomainError when 1 + lambda omega^2 x^2 <= 0.
MetricComponents metric_components(const ModelParams& params, double x);

/// Scalar-product weight sqrt(-g) g^00 = 1/sqrt(1 + lambda omega^2 x^2).
double weight_mu(const ModelParams& params, double x);

/// x -> xhat with xhat(0) = 0. PT requires |omega_hat x| <= 1.
double to_conformal(const ModelParams& params, double x);

/// Inverse of to_conformal. PT requires |omega_hat xhat| < pi/2.
double from_conformal(const ModelParams& params, double xhat);

/// Relativistic potential in the conformal frame:
/// PT (m^2/eps^2) tan^2, RM (m^2/eps^2) tanh^2, Flat m^2 omega^2 xhat^2.
double potential(const ModelParams& params, double xhat);

/// Conformal factor of the line element, equal to 1 + V(xhat)/m^2.
double conformal_factor(const ModelParams& params, double xhat);

/// Value the potential approaches as |xhat| -> infinity (RM), +inf otherwise.
double potential_asymptote(const ModelParams& params);

}  // namespace relosc
