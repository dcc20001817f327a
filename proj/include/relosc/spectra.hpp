#pragma once

#include <optional>
#include <vector>

#include "relosc/model.hpp"

namespace relosc {

/// Main quantum number n = 2 n_s + s.
struct LevelIndex {
  unsigned n;

  unsigned n_s() const noexcept { return n / 2; }
  unsigned s() const noexcept { return n % 2; }
};

struct Level {
  unsigned n;
  double energy;
};

struct SpectrumReport {
  Regime regime;
  std::optional<ShapeParam> shape;  // k (PT) or k' (RM); none for Flat
  std::vector<Level> levels;
  std::optional<double> threshold;  // RM continuum edge
  std::optional<long> n_max;        // RM highest bound level
};

// Every function returns the positive energy root.
double pt_level(const ModelParams& params, LevelIndex index);
double rm_level(const ModelParams& params, LevelIndex index);
double flat_level(const ModelParams& params, LevelIndex index);

/// Dispatches on the regime. Throws NoSuchLevel for RM levels above n_max.
double level(const ModelParams& params, LevelIndex index);

/// Largest integer strictly below k'.
long n_max(const ModelParams& params);

/// m sqrt(1 + 1/eps^2), the bottom of the RM continuum.
double continuum_threshold(const ModelParams& params);

/// nu(E) = sqrt(E^2 - threshold^2) / (2 omega_hat). Throws ParameterError below threshold.
double wavenumber_nu(const ModelParams& params, double energy);

/// PT and Flat: the first max_levels levels. RM: every bound level (n <= n_max), capped at max_levels.
SpectrumReport spectrum_report(const ModelParams& params, unsigned max_levels);

}  // namespace relosc

namespace relosc {

/// Distance beyond which the level-n envelope has dropped below `tol`
/// (relative to its peak scale). RM: sech^(k'-n)(omega_hat X) < tol;
/// Flat: Gaussian tail past the classical turning point; PT: the wall.
double decay_radius(const ModelParams& params, unsigned n, double tol);

}  // namespace relosc
