#pragma once

#include <cstddef>
#include <functional>

namespace relosc::oracle {

struct QuadratureResult {
  double value;
  double achieved_tolerance;  // |I_2p - I_p| / integral of |f|
  std::size_t panels;
  bool converged;
};

/// Composite 8-node Gauss-Legendre rule on `panels` equal panels, no refinement.
double gauss_legendre_8(const std::function<double(double)>& f, double lo, double hi,
                        std::size_t panels);

/// Composite 8-node Gauss-Legendre rule, doubling the panel count from
/// `panels` until successive estimates agree to `rel_tol` (relative to the
/// integral of |f|, so symmetric cancellations still terminate) or the cap
/// is reached. Hitting the cap is reported through `converged`, not thrown.
QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            std::size_t panels = 16, double rel_tol = 1e-12,
                            std::size_t max_panels = std::size_t{1} << 16);

}  // namespace relosc::oracle
