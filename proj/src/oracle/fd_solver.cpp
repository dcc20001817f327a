#include "relosc/oracle/fd_solver.hpp"

#include <cmath>
#include <string>

#include "relosc/errors.hpp"
#include "relosc/geometry.hpp"
#include "relosc/oracle/tridiagonal.hpp"
#include "relosc/spectra.hpp"

namespace relosc::oracle {

namespace {

void validate(const ModelParams& params, const FdConfig& cfg) {
  if (cfg.grid_sizes.empty()) throw ParameterError("FdConfig needs at least one grid size");
  for (std::size_t i = 0; i < cfg.grid_sizes.size(); ++i) {
    if (cfg.grid_sizes[i] < 5) throw ParameterError("FdConfig grid sizes must be >= 5");
    if (i > 0 && cfg.grid_sizes[i] <= cfg.grid_sizes[i - 1]) {
      throw ParameterError("FdConfig grid sizes must be strictly increasing");
    }
  }
  if (cfg.count == 0) throw ParameterError("FdConfig must request at least one eigenvalue");
  if (classify(params).tag == RegimeTag::RM) {
    const long top = n_max(params);
    if (static_cast<long>(cfg.count) > top + 1) {
      throw NoSuchLevel("requested " + std::to_string(cfg.count) +
                            " eigenvalues but the Rosen-Morse well binds only " +
                            std::to_string(top + 1),
                        top);
    }
  }
}

// Interior nodes only; the endpoints carry the Dirichlet zeros.
SymTridiagonal discretize(const ModelParams& params, double half, std::size_t points) {
  const double h = 2.0 * half / static_cast<double>(points - 1);
  const double inv_h2 = 1.0 / (h * h);
  const std::size_t n = points - 2;
  SymTridiagonal t{std::vector<double>(n), std::vector<double>(n - 1, -inv_h2)};
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -half + static_cast<double>(i + 1) * h;
    t.diag[i] = 2.0 * inv_h2 + potential(params, x);
  }
  return t;
}

}  // namespace

double box_half_width(const ModelParams& params, unsigned top, const FdConfig& cfg) {
  switch (classify(params).tag) {
    case RegimeTag::PT:
      return domain(params).hi;
    case RegimeTag::RM: {
      const double flat_edge = std::acosh(1.0 / std::sqrt(cfg.potential_tol)) / params.omega_hat();
      return std::max(flat_edge, decay_radius(params, top, cfg.envelope_tol));
    }
    case RegimeTag::Flat:
      return decay_radius(params, top, cfg.envelope_tol);
  }
  return 0.0;
}

FdResult fd_eigenvalues(const ModelParams& params, const FdConfig& cfg) {
  validate(params, cfg);
  const double half = box_half_width(params, static_cast<unsigned>(cfg.count - 1), cfg);

  FdResult result{{}, {}, -half, half};
  for (std::size_t points : cfg.grid_sizes) {
    result.raw.push_back(lowest_eigenvalues(discretize(params, half, points), cfg.count));
  }

  const double m2 = params.m() * params.m();
  const std::vector<double>& fine = result.raw.back();
  result.energies.resize(cfg.count);
  if (cfg.grid_sizes.size() == 1) {
    for (std::size_t i = 0; i < cfg.count; ++i) result.energies[i] = std::sqrt(m2 + fine[i]);
    return result;
  }
  // h^2 error model: mu* = (r^2 mu_fine - mu_coarse) / (r^2 - 1), r = h_coarse / h_fine
  const std::size_t nc = cfg.grid_sizes[cfg.grid_sizes.size() - 2];
  const std::size_t nf = cfg.grid_sizes.back();
  const double r = static_cast<double>(nf - 1) / static_cast<double>(nc - 1);
  const double r2 = r * r;
  const std::vector<double>& coarse = result.raw[result.raw.size() - 2];
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const double mu = (r2 * fine[i] - coarse[i]) / (r2 - 1.0);
    result.energies[i] = std::sqrt(m2 + mu);
  }
  return result;
}

std::size_t fd_bound_count(const ModelParams& params, const FdConfig& cfg) {
  if (classify(params).tag != RegimeTag::RM) {
    throw ParameterError("bound-state counting applies to the Rosen-Morse regime only");
  }
  const double half = box_half_width(params, static_cast<unsigned>(n_max(params)), cfg);
  const SymTridiagonal t = discretize(params, half, cfg.grid_sizes.back());
  return count_below(t, potential_asymptote(params));
}

GridFunction fd_eigenvector(const ModelParams& params, std::size_t points, unsigned index,
                            const FdConfig& cfg) {
  if (points < 5 || points % 2 == 0) {
    throw ParameterError("fd_eigenvector needs an odd grid size >= 5");
  }
  FdConfig one = cfg;
  one.count = index + 1;
  one.grid_sizes = {points};
  validate(params, one);
  const double half = box_half_width(params, index, cfg);
  const SymTridiagonal t = discretize(params, half, points);
  const double mu = eigenvalue(t, index);
  const std::vector<double> v = inverse_iteration(t, mu);

  const double h = 2.0 * half / static_cast<double>(points - 1);
  std::vector<double> values(points, 0.0);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) norm2 += v[i] * v[i];
  const double scale = 1.0 / std::sqrt(norm2 * h);
  for (std::size_t i = 0; i < v.size(); ++i) values[i + 1] = v[i] * scale;

  const std::size_t centre = points / 2;
  const double probe = index % 2 == 0 ? values[centre] : values[centre + 1];
  if (probe < 0.0) {
    for (auto& x : values) x = -x;
  }
  return GridFunction(-half, half, std::move(values));
}

}  // namespace relosc::oracle
