#include "relosc/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "relosc/errors.hpp"

namespace relosc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double horizon_factor(const ModelParams& params, double x) {
  const double wx = params.omega() * x;
  const double d = 1.0 + params.lambda() * wx * wx;
  if (!(d > 0.0)) {
    throw DomainError("position x = " + std::to_string(x) +
                      " lies on or beyond the horizon (1 + lambda omega^2 x^2 <= 0)");
  }
  return d;
}

void require_in_domain(const ModelParams& params, double xhat) {
  if (std::isnan(xhat)) throw DomainError("conformal position is NaN");
  if (params.lambda() < 0.0 && !domain(params).contains(xhat)) {
    throw DomainError("conformal position xhat = " + std::to_string(xhat) +
                      " is outside the Poschl-Teller well");
  }
}

}  // namespace

bool Domain::bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }

Domain domain(const ModelParams& params) {
  if (params.lambda() < 0.0) {
    const double half = 0.5 * std::numbers::pi / params.omega_hat();
    return {-half, half};
  }
  return {-kInf, kInf};
}

MetricComponents metric_components(const ModelParams& params, double x) {
  const double d = horizon_factor(params, x);
  const double wx = params.omega() * x;
  const double num = 1.0 + (1.0 + params.lambda()) * wx * wx;
  return {num / d, -num / (d * d)};
}

double weight_mu(const ModelParams& params, double x) {
  return 1.0 / std::sqrt(horizon_factor(params, x));
}

double to_conformal(const ModelParams& params, double x) {
  const double wh = params.omega_hat();
  switch (classify(params).tag) {
    case RegimeTag::PT: {
      const double u = wh * x;
      if (!(std::fabs(u) <= 1.0)) {
        throw DomainError("position x = " + std::to_string(x) + " is beyond the PT horizon");
      }
      return std::asin(u) / wh;
    }
    case RegimeTag::RM:
      return std::asinh(wh * x) / wh;
    case RegimeTag::Flat:
      return x;
  }
  return x;
}

double from_conformal(const ModelParams& params, double xhat) {
  const double wh = params.omega_hat();
  switch (classify(params).tag) {
    case RegimeTag::PT:
      require_in_domain(params, xhat);
      return std::sin(wh * xhat) / wh;
    case RegimeTag::RM:
      return std::sinh(wh * xhat) / wh;
    case RegimeTag::Flat:
      return xhat;
  }
  return xhat;
}

double potential(const ModelParams& params, double xhat) {
  require_in_domain(params, xhat);
  const double m = params.m();
  switch (classify(params).tag) {
    case RegimeTag::PT: {
      const double eps = params.epsilon();
      const double t = std::tan(params.omega_hat() * xhat);
      return (m * m) / (eps * eps) * t * t;
    }
    case RegimeTag::RM: {
      const double eps = params.epsilon();
      const double t = std::tanh(params.omega_hat() * xhat);
      return (m * m) / (eps * eps) * t * t;
    }
    case RegimeTag::Flat: {
      const double mw = m * params.omega() * xhat;
      return mw * mw;
    }
  }
  return 0.0;
}

double conformal_factor(const ModelParams& params, double xhat) {
  const double m = params.m();
  return 1.0 + potential(params, xhat) / (m * m);
}

double potential_asymptote(const ModelParams& params) {
  if (params.lambda() > 0.0) {
    const double q = params.m() / params.epsilon();
    return q * q;
  }
  return kInf;
}

}  // namespace relosc
