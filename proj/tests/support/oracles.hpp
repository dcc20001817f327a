#pragma once

// Test-only reference computations, independent of the library code paths.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace relosc::testing {

using mp50 = boost::multiprecision::cpp_dec_float_50;

/// F(-n_s, b; c; z) by direct Pochhammer products at 50 digits.
inline double hyp2f1_terminating_mp(unsigned n_s, double b, double c, double z) {
  const mp50 bb(b), cc(c), zz(z);
  mp50 sum = 1;
  for (unsigned j = 1; j <= n_s; ++j) {
    mp50 poch_a = 1, poch_b = 1, poch_c = 1, fact = 1, zp = 1;
    for (unsigned i = 0; i < j; ++i) {
      poch_a *= mp50(-static_cast<int>(n_s) + static_cast<int>(i));
      poch_b *= bb + i;
      poch_c *= cc + i;
      fact *= i + 1;
      zp *= zz;
    }
    sum += poch_a * poch_b / (poch_c * fact) * zp;
  }
  return static_cast<double>(sum);
}

/// Plain power series of F(a, b; c; z) in complex arithmetic, |z| < 1.
/// Returns the full complex sum so callers can inspect the imaginary part.
inline std::complex<double> hyp2f1_direct(std::complex<double> a, std::complex<double> b,
                                          double c, double z, unsigned max_terms = 200000) {
  using cl = std::complex<long double>;
  const cl al(a.real(), a.imag()), bl(b.real(), b.imag());
  cl term = 1, sum = 1;
  for (unsigned j = 0; j < max_terms; ++j) {
    const long double jd = j;
    term *= (al + jd) * (bl + jd) / ((static_cast<long double>(c) + jd) * (jd + 1)) *
            static_cast<long double>(z);
    sum += term;
    if (j > 20 && std::abs(term) < 1e-22L * std::abs(sum)) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// PT ground state: N^2 * integral of cos^(2k)(w x) over the well = 1, with
/// integral = sqrt(pi) Gamma(k + 1/2) / (w Gamma(k + 1)).
inline double pt_ground_norm(double k, double omega_hat) {
  const double integral = std::sqrt(std::numbers::pi) *
                          std::exp(std::lgamma(k + 0.5) - std::lgamma(k + 1.0)) / omega_hat;
  return 1.0 / std::sqrt(integral);
}

/// Normalized harmonic-oscillator state for -u'' + (m omega)^2 x^2 u via the
/// stable Hermite-function recurrence.
inline double nrho_state(unsigned n, double m_omega, double x) {
  const double a = std::sqrt(m_omega);
  const double y = a * x;
  double prev = 0.0;
  double cur = std::pow(m_omega / std::numbers::pi, 0.25) * std::exp(-0.5 * y * y);
  for (unsigned j = 1; j <= n; ++j) {
    const double next = std::sqrt(2.0 / j) * y * cur - std::sqrt((j - 1.0) / j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace relosc::testing
