#include "relosc/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "relosc/errors.hpp"

namespace relosc {

namespace {

constexpr double kRelTol = 1e-16;
constexpr std::size_t kMinTerms = 10;
constexpr std::size_t kMaxTerms = 10'000'000;

// Ratio A_j / A_{j-1} of consecutive coefficients of F(-n_s, b; c; z).
double coefficient_ratio(unsigned n_s, double b, double c, unsigned j) {
  const double jm1 = j - 1.0;
  return (jm1 - n_s) * (b + jm1) / ((c + jm1) * j);
}

}  // namespace

namespace {

double horner_homogeneous(unsigned n_s, double b, double c, double z_num, double z_den) {
  // b_j = b_{j+1} z_num + A_j z_den^(n_s - j), running from j = n_s down to 0.
  std::vector<double> coeff(n_s + 1, 1.0);
  for (unsigned j = 1; j <= n_s; ++j) coeff[j] = coeff[j - 1] * coefficient_ratio(n_s, b, c, j);
  double acc = coeff[n_s];
  double den_pow = 1.0;
  for (unsigned j = n_s; j >= 1; --j) {
    den_pow *= z_den;
    acc = acc * z_num + coeff[j - 1] * den_pow;
  }
  return acc;
}

// F(-n, b; c; z) is the Jacobi polynomial P_n^(alpha,beta)(1 - 2z) rescaled to
// F(0) = 1, with alpha = c - 1 and beta = b - n - c. The degree recurrence,
//   2 (j+a+b')(2j+a+b'-2)(j+a) F_j
//     = (2j+a+b'-1)[(2j+a+b')(2j+a+b'-2) x + a^2 - b'^2] F_{j-1}
//       - 2 (j-1)(j+b'-1)(2j+a+b') F_{j-2},
// avoids the cancellation of the monomial sum. Here it runs on
// G_j = z_den^j F_j with x z_den = z_den - 2 z_num. Returns false when a
// leading coefficient vanishes for these parameters.
bool jacobi_homogeneous(unsigned n_s, double b, double c, double z_num, double z_den,
                        double& out) {
  const double al = c - 1.0;
  const double be = b - n_s - c;
  const double xd = z_den - 2.0 * z_num;
  double g_prev = 1.0;                                   // G_0
  double g = z_den - (al + be + 2.0) / (al + 1.0) * z_num;  // G_1
  if (n_s == 0) {
    out = 1.0;
    return true;
  }
  for (unsigned j = 2; j <= n_s; ++j) {
    const double s = 2.0 * j + al + be;
    const double lead = 2.0 * (j + al + be) * (s - 2.0) * (j + al);
    if (std::fabs(lead) < 1e-10 * (1.0 + std::fabs(s) * s * j)) return false;
    const double next = ((s - 1.0) * (s * (s - 2.0) * xd + (al * al - be * be) * z_den) * g -
                         2.0 * (j - 1.0) * (j + be - 1.0) * s * z_den * z_den * g_prev) /
                        lead;
    g_prev = g;
    g = next;
  }
  out = g;
  return std::isfinite(out);
}

}  // namespace

double hyp2f1_terminating(unsigned n_s, double b, double c, double z) {
  return hyp2f1_terminating_homogeneous(n_s, b, c, z, 1.0);
}

double hyp2f1_terminating_homogeneous(unsigned n_s, double b, double c, double z_num,
                                      double z_den) {
  if (z_num == 0.0) return std::pow(z_den, n_s);
  double value = 0.0;
  if (c != 0.0 && jacobi_homogeneous(n_s, b, c, z_num, z_den, value)) return value;
  return horner_homogeneous(n_s, b, c, z_num, z_den);
}

double hyp1f1_terminating(unsigned n_s, double c, double y) {
  double acc = 1.0;
  for (unsigned j = n_s; j >= 1; --j) {
    const double jm1 = j - 1.0;
    acc = 1.0 + (jm1 - n_s) / ((c + jm1) * j) * y * acc;
  }
  return acc;
}

SeriesResult hyp2f1_conjugate_detail(double re_a, double nu, double c, double z) {
  if (!(z <= 0.0)) {
    throw ParameterError("hyp2f1_conjugate requires z <= 0, got " + std::to_string(z));
  }
  if (!(nu >= 0.0)) {
    throw ParameterError("hyp2f1_conjugate requires nu >= 0");
  }
  if (!(c > 0.0)) {
    throw ParameterError("hyp2f1_conjugate requires c > 0");
  }
  // Extended precision for the running term: its relative error grows linearly
  // with the term count (~1/(1-w)), and callers differentiate U numerically.
  using cplx = std::complex<long double>;
  const cplx a(re_a, nu);
  const cplx b2 = static_cast<long double>(c) - std::conj(a);  // c - b
  const long double w = static_cast<long double>(z) / (static_cast<long double>(z) - 1.0L);
  const long double cl = c;

  // Ratio magnitudes are monotone in j only once j exceeds the parameter sizes.
  const auto monotone_from =
      static_cast<std::size_t>(std::abs(a) + std::abs(b2) + 1.0L);
  const std::size_t min_terms = std::max(kMinTerms, monotone_from);

  cplx sum(1.0L, 0.0L);
  cplx term(1.0L, 0.0L);
  double achieved = 1.0;
  std::size_t j = 0;
  bool converged = false;
  while (j < kMaxTerms) {
    const long double jd = static_cast<long double>(j);
    term *= (a + jd) * (b2 + jd) / ((cl + jd) * (jd + 1.0L)) * w;
    ++j;
    sum += term;
    const long double mag = std::abs(sum);
    achieved = static_cast<double>(mag > 0.0L ? std::abs(term) / mag : std::abs(term));
    if (term == cplx(0.0L, 0.0L) || (j >= min_terms && achieved < kRelTol)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "hyp2f1_conjugate did not converge at z = %.6g (achieved relative term size %.3g)", z,
                  achieved);
    throw NumericalError(msg, achieved);
  }

  // (1-z)^(-a) = (1-z)^(-re_a) * exp(-i nu log(1-z))
  const double log1mz = std::log1p(-z);
  const double modulus = std::exp(-re_a * log1mz);
  const double phase = -nu * log1mz;
  const double value = modulus * static_cast<double>(std::cos(phase) * sum.real() -
                                                     std::sin(phase) * sum.imag());
  return {value, j + 1, achieved};
}

double hyp2f1_conjugate(double re_a, double nu, double c, double z) {
  return hyp2f1_conjugate_detail(re_a, nu, c, z).value;
}

}  // namespace relosc
