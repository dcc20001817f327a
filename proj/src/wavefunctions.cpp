#include "relosc/wavefunctions.hpp"

#include <cmath>
#include <string>

#include "relosc/errors.hpp"
#include "relosc/geometry.hpp"
#include "relosc/hypergeometric.hpp"
#include "relosc/oracle/quadrature.hpp"

namespace relosc {

namespace {

constexpr double kSupportTol = 1e-16;

// sech(t) without overflowing cosh for large |t|.
double sech(double t) {
  const double e = std::exp(-std::fabs(t));
  return 2.0 * e / (1.0 + e * e);
}

double profile(const ModelParams& params, LevelIndex index, std::optional<ShapeParam> shape,
               double xhat) {
  const unsigned n_s = index.n_s();
  const unsigned s = index.s();
  const double c = s + 0.5;
  switch (classify(params).tag) {
    case RegimeTag::PT: {
      if (!domain(params).contains(xhat)) {
        throw DomainError("xhat = " + std::to_string(xhat) + " is outside the PT well");
      }
      const double k = shape->value;
      const double th = params.omega_hat() * xhat;
      const double cs = std::cos(th);
      const double sn = std::sin(th);
      if (!(cs > 0.0)) return 0.0;
      const double odd = s == 1 ? sn : 1.0;
      return std::pow(cs, k) * odd * hyp2f1_terminating(n_s, k + s + n_s, c, sn * sn);
    }
    case RegimeTag::RM: {
      // cosh^-k' sinh^s F(-sinh^2) rewritten in tanh and sech so nothing overflows:
      // sech^(k' - s - 2 n_s) tanh^s sum_j A_j (-tanh^2)^j (sech^2)^(n_s - j)
      const double kp = shape->value;
      const double th = params.omega_hat() * xhat;
      const double t = std::tanh(th);
      const double sh = sech(th);
      const double odd = s == 1 ? t : 1.0;
      const double poly =
          hyp2f1_terminating_homogeneous(n_s, -kp + s + n_s, c, -t * t, sh * sh);
      return std::pow(sh, kp - s - 2.0 * n_s) * odd * poly;
    }
    case RegimeTag::Flat: {
      const double y = std::sqrt(params.m() * params.omega()) * xhat;
      const double odd = s == 1 ? y : 1.0;
      return odd * hyp1f1_terminating(n_s, c, y * y) * std::exp(-0.5 * y * y);
    }
  }
  return 0.0;
}

std::optional<ShapeParam> shape_for(const ModelParams& params) {
  switch (classify(params).tag) {
    case RegimeTag::PT:
      return shape_k(params);
    case RegimeTag::RM:
      return shape_k_prime(params);
    case RegimeTag::Flat:
      return std::nullopt;
  }
  return std::nullopt;
}

oracle::QuadratureResult integrate_square(const BoundState& state, double scale) {
  const double half = state.support();
  auto f = [&](double x) {
    const double u = scale * eval_bound(state, x);
    return u * u;
  };
  return oracle::quadrature(f, -half, half, 64);
}

}  // namespace

BoundState normalize(const ModelParams& params, LevelIndex index) {
  const double energy = level(params, index);  // throws NoSuchLevel for missing RM levels
  const double support = decay_radius(params, index.n, kSupportTol);
  BoundState state(params, index, energy, shape_for(params), support);
  const auto q = integrate_square(state, 1.0);
  if (!(q.value > 0.0) || !std::isfinite(q.value)) {
    throw NumericalError("bound state has no finite positive norm", q.achieved_tolerance);
  }
  if (!q.converged && q.achieved_tolerance > 1e-10) {
    throw NumericalError("normalization quadrature did not converge", q.achieved_tolerance);
  }
  state.norm_ = 1.0 / std::sqrt(q.value);
  state.norm_tolerance_ = q.achieved_tolerance;
  return state;
}

BoundState renormalize(const BoundState& state) {
  BoundState out = state;
  const auto q = integrate_square(state, 1.0);
  out.norm_ = state.norm_ / std::sqrt(q.value);
  out.norm_tolerance_ = q.achieved_tolerance;
  return out;
}

double eval_bound(const BoundState& state, double xhat) {
  return state.norm() * profile(state.params(), state.index(), state.shape(), xhat);
}

double inner_product(const BoundState& f, const BoundState& g) {
  if (!(f.params() == g.params())) {
    throw ParameterError("inner product of states from different models (domain mismatch)");
  }
  const double half = std::max(f.support(), g.support());
  auto integrand = [&](double x) { return eval_bound(f, x) * eval_bound(g, x); };
  return oracle::quadrature(integrand, -half, half, 64).value;
}

double inner_product(const oracle::GridFunction& f, const oracle::GridFunction& g) {
  return oracle::grid_inner_product(f, g);
}

unsigned count_nodes(const BoundState& state, unsigned grid_points) {
  if (grid_points < 256) throw ParameterError("count_nodes needs at least 256 grid points");
  const double half = state.support();
  // endpoints excluded: the PT walls are zeros of every state
  const double h = 2.0 * half / (grid_points + 1.0);
  unsigned nodes = 0;
  int last = 0;
  for (unsigned i = 1; i <= grid_points; ++i) {
    const double u = eval_bound(state, -half + i * h);
    const int sign = (u > 0.0) - (u < 0.0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++nodes;
    last = sign;
  }
  return nodes;
}

ScatteringState make_scattering(const ModelParams& params, unsigned s, double energy) {
  if (s > 1) throw ParameterError("parity channel s must be 0 or 1");
  const double nu = wavenumber_nu(params, energy);  // checks regime and threshold
  return ScatteringState(params, s, energy, nu, shape_k_prime(params).value);
}

double eval_scattering(const ScatteringState& state, double xhat) {
  const unsigned s = state.parity();
  const double kp = state.shape();
  const double th = state.params().omega_hat() * xhat;
  const double sh = std::sinh(th);
  const double odd = s == 1 ? sh : 1.0;
  const double f = hyp2f1_conjugate(0.5 * (s - kp), state.nu(), s + 0.5, -sh * sh);
  return std::pow(std::cosh(th), -kp) * odd * f;
}

}  // namespace relosc
