#include "relosc/spectra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "relosc/errors.hpp"

namespace relosc {

double pt_level(const ModelParams& params, LevelIndex index) {
  const double k = shape_k(params).value;
  const double n = index.n;
  const double wh = params.omega_hat();
  const double m = params.m();
  return std::sqrt(m * m + wh * wh * (2.0 * k * (n + 0.5) + n * n));
}

long n_max(const ModelParams& params) {
  const double kp = shape_k_prime(params).value;
  const double c = std::ceil(kp);
  return static_cast<long>(c) - 1;
}

double rm_level(const ModelParams& params, LevelIndex index) {
  const double kp = shape_k_prime(params).value;
  const long top = n_max(params);
  if (static_cast<long>(index.n) > top) {
    throw NoSuchLevel("no bound state n = " + std::to_string(index.n) +
                          " (Rosen-Morse n_max = " + std::to_string(top) + ")",
                      top);
  }
  const double n = index.n;
  const double wh = params.omega_hat();
  const double m = params.m();
  return std::sqrt(m * m + wh * wh * (2.0 * kp * (n + 0.5) - n * n));
}

double flat_level(const ModelParams& params, LevelIndex index) {
  if (params.lambda() != 0.0) {
    throw ParameterError("flat_level requires lambda = 0");
  }
  const double m = params.m();
  return std::sqrt(m * m + 2.0 * m * params.omega() * (index.n + 0.5));
}

double level(const ModelParams& params, LevelIndex index) {
  switch (classify(params).tag) {
    case RegimeTag::PT:
      return pt_level(params, index);
    case RegimeTag::RM:
      return rm_level(params, index);
    case RegimeTag::Flat:
      return flat_level(params, index);
  }
  return 0.0;
}

double continuum_threshold(const ModelParams& params) {
  if (!(params.lambda() > 0.0)) {
    throw ParameterError("only the Rosen-Morse regime (lambda > 0) has a continuum");
  }
  const double eps = params.epsilon();
  return params.m() * std::sqrt(1.0 + 1.0 / (eps * eps));
}

double wavenumber_nu(const ModelParams& params, double energy) {
  const double edge = continuum_threshold(params);
  if (!(energy >= edge)) {
    throw ParameterError("energy " + std::to_string(energy) +
                         " lies below the continuum threshold " + std::to_string(edge));
  }
  // (E - edge)(E + edge) keeps nu(edge) exactly 0
  return std::sqrt((energy - edge) * (energy + edge)) / (2.0 * params.omega_hat());
}

SpectrumReport spectrum_report(const ModelParams& params, unsigned max_levels) {
  SpectrumReport report{classify(params), std::nullopt, {}, std::nullopt, std::nullopt};
  unsigned count = max_levels;
  switch (report.regime.tag) {
    case RegimeTag::PT:
      report.shape = shape_k(params);
      break;
    case RegimeTag::RM: {
      report.shape = shape_k_prime(params);
      report.threshold = continuum_threshold(params);
      report.n_max = n_max(params);
      const auto bound = static_cast<unsigned long>(*report.n_max + 1);
      if (bound < count) count = static_cast<unsigned>(bound);
      break;
    }
    case RegimeTag::Flat:
      break;
  }
  report.levels.reserve(count);
  for (unsigned n = 0; n < count; ++n) {
    report.levels.push_back({n, level(params, {n})});
  }
  return report;
}

}  // namespace relosc

namespace relosc {

double decay_radius(const ModelParams& params, unsigned n, double tol) {
  const double log_inv_tol = -std::log(tol);
  switch (classify(params).tag) {
    case RegimeTag::PT:
      return 0.5 * std::numbers::pi / params.omega_hat();
    case RegimeTag::RM: {
      const double rate = shape_k_prime(params).value - n;
      if (!(rate > 0.0)) {
        throw NoSuchLevel("no bound state n = " + std::to_string(n), n_max(params));
      }
      // cosh(y) >= e^y / 2, so this X overshoots the exact root by at most ln2/omega_hat
      return (log_inv_tol / rate + std::numbers::ln2) / params.omega_hat();
    }
    case RegimeTag::Flat: {
      const double y = std::sqrt(2.0 * n + 1.0) + std::sqrt(2.0 * log_inv_tol);
      return y / std::sqrt(params.m() * params.omega());
    }
  }
  return 0.0;
}

}  // namespace relosc
