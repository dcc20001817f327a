#pragma once

#include <cstddef>
#include <vector>

#include "relosc/model.hpp"
#include "relosc/oracle/grid_function.hpp"

namespace relosc::oracle {

struct FdConfig {
  /// Total grid points including both Dirichlet ends; strictly increasing.
  /// Richardson extrapolation uses the last two.
  std::vector<std::size_t> grid_sizes{4097, 8193};
  std::size_t count = 1;
  /// RM box: V within this relative distance of its asymptote at the edge.
  double potential_tol = 1e-12;
  /// RM/Flat box: envelope of the highest requested state below this at the edge.
  double envelope_tol = 1e-10;
};

struct FdResult {
  std::vector<double> energies;  // extrapolated, E = sqrt(m^2 + mu)
  /// Operator eigenvalues mu = E^2 - m^2 per grid, in config order.
  std::vector<std::vector<double>> raw;
  double lo;  // box edges in xhat (PT walls or +/- truncation radius)
  double hi;
};

/// Half-width of the Dirichlet box used for a state of level `top` (RM/Flat).
/// PT returns the wall position pi/(2 omega_hat).
double box_half_width(const ModelParams& params, unsigned top, const FdConfig& cfg);

/// Lowest cfg.count eigenvalues of -d^2/dxhat^2 + V with a 3-point Laplacian.
/// Throws NoSuchLevel if an RM request exceeds the bound-state count.
FdResult fd_eigenvalues(const ModelParams& params, const FdConfig& cfg);

/// RM only: number of finest-grid eigenvalues below the continuum edge m^2/eps^2.
std::size_t fd_bound_count(const ModelParams& params, const FdConfig& cfg);

/// Normalized eigenvector of level `index` on an N-point grid, endpoints included
/// (zero there). Sign: positive at the centre for even index, positive just
/// right of the centre for odd index. N must be odd.
GridFunction fd_eigenvector(const ModelParams& params, std::size_t points, unsigned index,
                            const FdConfig& cfg = {});

}  // namespace relosc::oracle
