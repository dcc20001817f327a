#include "relosc/model.hpp"

#include <cmath>
#include <string>

#include "relosc/errors.hpp"

namespace relosc {

ModelParams::ModelParams(double m, double omega, double lambda)
    : m_(m), omega_(omega), lambda_(lambda) {
  if (!(std::isfinite(m) && m > 0.0)) {
    throw ParameterError("mass m must be finite and > 0, got " + std::to_string(m));
  }
  if (!(std::isfinite(omega) && omega > 0.0)) {
    throw ParameterError("frequency omega must be finite and > 0, got " +
                         std::to_string(omega));
  }
  if (!std::isfinite(lambda)) {
    throw ParameterError("deformation lambda must be finite");
  }
}

double ModelParams::epsilon() const noexcept { return std::sqrt(std::fabs(lambda_)); }

double ModelParams::omega_hat() const noexcept { return epsilon() * omega_; }

std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::PT:
      return "PT";
    case RegimeTag::RM:
      return "RM";
    case RegimeTag::Flat:
      return "Flat";
  }
  return "?";
}

Regime classify(const ModelParams& params) {
  const double lambda = params.lambda();
  if (lambda < 0.0) return {RegimeTag::PT, lambda == -1.0};
  if (lambda > 0.0) return {RegimeTag::RM, false};
  return {RegimeTag::Flat, false};
}

double shape_ratio(const ModelParams& params) {
  const double q = params.m() / (params.epsilon() * params.omega_hat());
  return q * q;
}

namespace {

// Positive root of x(x+1) = r, written without the 1 - sqrt(1+4r) cancellation.
double positive_root_plus(double r) { return 2.0 * r / (1.0 + std::sqrt(1.0 + 4.0 * r)); }

}  // namespace

ShapeParam shape_k(const ModelParams& params) {
  if (!(params.lambda() < 0.0)) {
    throw ParameterError("shape_k requires lambda < 0 (Poschl-Teller regime)");
  }
  // k(k-1) = r  <=>  (k-1)((k-1)+1) = r
  return {1.0 + positive_root_plus(shape_ratio(params))};
}

ShapeParam shape_k_prime(const ModelParams& params) {
  if (!(params.lambda() > 0.0)) {
    throw ParameterError("shape_k_prime requires lambda > 0 (Rosen-Morse regime)");
  }
  return {positive_root_plus(shape_ratio(params))};
}

}  // namespace relosc
