#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relosc/cli/output.hpp"

namespace relosc::cli {

/// Flag values shared by every subcommand. Unset optionals take the
/// per-command defaults documented in the README.
struct Options {
  double m = 1.0;
  double omega = 1.0;
  std::optional<double> lambda;
  std::optional<unsigned> levels;
  std::optional<unsigned> points;
  std::optional<unsigned> n;
  std::optional<double> energy;
  bool scattering = false;
  unsigned parity = 0;
  std::vector<double> eps_list{0.1, 0.01, 0.001};
  std::string branch = "both";  // limit: pt, rm or both
  double tolerance = 1e-5;
  std::optional<double> xhat_max;
  double margin = 1e-3;  // PT grids stop this fraction of the half-width short of the walls
  bool timestamp = true;
};

OutputRecord cmd_spectrum(const Options& opts);
OutputRecord cmd_potential(const Options& opts);
OutputRecord cmd_wavefunction(const Options& opts);

struct ValidationOutcome {
  OutputRecord record;
  bool passed;
};
ValidationOutcome cmd_validate(const Options& opts);

OutputRecord cmd_limit(const Options& opts);

}  // namespace relosc::cli
