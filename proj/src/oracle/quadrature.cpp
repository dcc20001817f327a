#include "relosc/oracle/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "relosc/errors.hpp"

namespace relosc::oracle {

namespace {

constexpr int kNodes = 8;

struct Rule {
  std::array<double, kNodes> x{};
  std::array<double, kNodes> w{};
};

// Nodes by Newton iteration on P_8 from the Chebyshev-like initial guesses.
Rule make_rule() {
  Rule r;
  for (int i = 0; i < kNodes / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (kNodes + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= kNodes; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = kNodes * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    r.x[i] = -z;
    r.x[kNodes - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.w[i] = w;
    r.w[kNodes - 1 - i] = w;
  }
  return r;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

struct Estimate {
  double value;
  double abs_value;
};

Estimate composite(const std::function<double(double)>& f, double lo, double hi,
                   std::size_t panels) {
  const Rule& r = rule();
  const double width = (hi - lo) / static_cast<double>(panels);
  const double half = 0.5 * width;
  double sum = 0.0;
  double abs_sum = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * width;
    double panel = 0.0;
    double abs_panel = 0.0;
    for (int i = 0; i < kNodes; ++i) {
      const double fx = f(mid + half * r.x[i]);
      panel += r.w[i] * fx;
      abs_panel += r.w[i] * std::fabs(fx);
    }
    sum += panel;
    abs_sum += abs_panel;
  }
  return {sum * half, abs_sum * half};
}

}  // namespace

double gauss_legendre_8(const std::function<double(double)>& f, double lo, double hi,
                        std::size_t panels) {
  if (panels == 0) throw ParameterError("quadrature needs at least one panel");
  return composite(f, lo, hi, panels).value;
}

QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            std::size_t panels, double rel_tol, std::size_t max_panels) {
  if (panels == 0) throw ParameterError("quadrature needs at least one panel");
  if (!(std::isfinite(lo) && std::isfinite(hi))) {
    throw ParameterError("quadrature bounds must be finite");
  }
  Estimate prev = composite(f, lo, hi, panels);
  double achieved = 1.0;
  while (panels * 2 <= max_panels) {
    panels *= 2;
    const Estimate next = composite(f, lo, hi, panels);
    const double diff = std::fabs(next.value - prev.value);
    achieved = next.abs_value > 0.0 ? diff / next.abs_value : 0.0;
    prev = next;
    if (achieved < rel_tol) return {next.value, achieved, panels, true};
  }
  return {prev.value, achieved, panels, false};
}

}  // namespace relosc::oracle
