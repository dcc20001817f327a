#pragma once

#include <string_view>

namespace relosc {

/// Parameters of one member of the oscillator family (natural units, hbar = c = 1).
///
/// Only the mass, the frequency and the deformation are stored. The
/// magnitude epsilon = sqrt(|lambda|) and the scaled frequency
/// omega_hat = epsilon * omega are always derived so they cannot drift
/// out of sync with lambda.
class ModelParams {
 public:
  /// Throws ParameterError unless m > 0, omega > 0 and lambda is finite.
  ModelParams(double m, double omega, double lambda);

  double m() const noexcept { return m_; }
  double omega() const noexcept { return omega_; }
  double lambda() const noexcept { return lambda_; }

  double epsilon() const noexcept;
  double omega_hat() const noexcept;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double m_;
  double omega_;
  double lambda_;
};

enum class RegimeTag { PT, RM, Flat };

struct Regime {
  RegimeTag tag;
  bool is_rho;  // lambda == -1 exactly (anti-de Sitter member)

  friend bool operator==(const Regime&, const Regime&) = default;
};

std::string_view to_string(RegimeTag tag);

Regime classify(const ModelParams& params);

/// Dimensionless shape parameter, k for PT and k' for RM.
struct ShapeParam {
  double value;
};

/// m^2 / (epsilon^2 omega_hat^2), the common right-hand side of both quadratics.
double shape_ratio(const ModelParams& params);

/// Positive root of k(k-1) = m^2/(eps^2 omega_hat^2). Requires lambda < 0.
ShapeParam shape_k(const ModelParams& params);

/// Positive root of k'(k'+1) = m^2/(eps^2 omega_hat^2). Requires lambda > 0.
ShapeParam shape_k_prime(const ModelParams& params);

}  // namespace relosc
