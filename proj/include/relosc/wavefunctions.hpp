#pragma once

#include <optional>

#include "relosc/model.hpp"
#include "relosc/oracle/grid_function.hpp"
#include "relosc/spectra.hpp"

namespace relosc {

/// Normalized bound state in the conformal frame.
///
/// PT:   N cos^k(w x) sin^s(w x) F(-n_s, k+s+n_s; s+1/2; sin^2(w x))
/// RM:   N cosh^-k'(w x) sinh^s(w x) F(-n_s, -k'+s+n_s; s+1/2; -sinh^2(w x))
/// Flat: N y^s 1F1(-n_s; s+1/2; y^2) exp(-y^2/2), y = sqrt(m omega) xhat
/// with w = omega_hat. N > 0, so the state is positive at the origin (even n)
/// or rises through it (odd n).
class BoundState {
 public:
  const ModelParams& params() const noexcept { return params_; }
  LevelIndex index() const noexcept { return index_; }
  double energy() const noexcept { return energy_; }
  std::optional<ShapeParam> shape() const noexcept { return shape_; }
  double norm() const noexcept { return norm_; }
  /// Half-width of the integration interval: the PT wall, or the RM/Flat
  /// radius past which the envelope is below 1e-16.
  double support() const noexcept { return support_; }
  /// Quadrature tolerance achieved while normalizing.
  double norm_tolerance() const noexcept { return norm_tolerance_; }

 private:
  friend BoundState normalize(const ModelParams&, LevelIndex);
  friend BoundState renormalize(const BoundState&);
  BoundState(ModelParams params, LevelIndex index, double energy,
             std::optional<ShapeParam> shape, double support)
      : params_(params), index_(index), energy_(energy), shape_(shape), support_(support) {}

  ModelParams params_;
  LevelIndex index_;
  double energy_;
  std::optional<ShapeParam> shape_;
  double norm_ = 1.0;
  double support_;
  double norm_tolerance_ = 0.0;
};

/// Builds level n and fixes N by quadrature of |U|^2. Throws NoSuchLevel for RM n > n_max.
BoundState normalize(const ModelParams& params, LevelIndex index);

/// Rescales an existing state so its quadrature norm is 1 again.
BoundState renormalize(const BoundState& state);

/// N * (unnormalized profile). Throws DomainError outside the PT well.
double eval_bound(const BoundState& state, double xhat);

/// Real L2 product over the conformal domain (weight 1).
/// Throws ParameterError if the states belong to different models.
double inner_product(const BoundState& f, const BoundState& g);
double inner_product(const oracle::GridFunction& f, const oracle::GridFunction& g);

/// Interior sign changes of U on a uniform grid over the support.
unsigned count_nodes(const BoundState& state, unsigned grid_points = 1024);

/// RM continuum state of parity s with N_nu = 1:
///   cosh^-k'(w x) sinh^s(w x) F(a, conj(a); s+1/2; -sinh^2(w x)),  a = (s - k')/2 + i nu.
/// Equals 1 at the origin for s = 0 and behaves like sinh(w x) there for s = 1.
class ScatteringState {
 public:
  const ModelParams& params() const noexcept { return params_; }
  unsigned parity() const noexcept { return s_; }
  double energy() const noexcept { return energy_; }
  double nu() const noexcept { return nu_; }
  double shape() const noexcept { return kp_; }

 private:
  friend ScatteringState make_scattering(const ModelParams&, unsigned, double);
  ScatteringState(ModelParams params, unsigned s, double energy, double nu, double kp)
      : params_(params), s_(s), energy_(energy), nu_(nu), kp_(kp) {}

  ModelParams params_;
  unsigned s_;
  double energy_;
  double nu_;
  double kp_;
};

/// Requires lambda > 0, s in {0, 1} and energy >= continuum_threshold.
ScatteringState make_scattering(const ModelParams& params, unsigned s, double energy);

double eval_scattering(const ScatteringState& state, double xhat);

}  // namespace relosc
