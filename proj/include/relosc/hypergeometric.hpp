#pragma once

#include <cstddef>

namespace relosc {

/// F(-n_s, b; c; z) as the exact (n_s + 1)-term polynomial. Valid for every real z.
double hyp2f1_terminating(unsigned n_s, double b, double c, double z);

/// Homogeneous form of the terminating series:
///   sum_j A_j z_num^j z_den^(n_s - j) = z_den^n_s F(-n_s, b; c; z_num / z_den).
/// Lets callers evaluate the polynomial in bounded variables (tanh^2, sech^2)
/// when z itself is huge.
double hyp2f1_terminating_homogeneous(unsigned n_s, double b, double c, double z_num,
                                      double z_den);

/// Confluent polynomial 1F1(-n_s; c; y).
double hyp1f1_terminating(unsigned n_s, double c, double y);

struct SeriesResult {
  double value;
  std::size_t terms;
  double achieved_tolerance;  // last |term| / |partial sum|
};

/// F(a, conj(a); c; z) for a = re_a + i nu, real c > 0 and z <= 0.
///
/// The parameters are a conjugate pair so the value is real. The series is
/// summed after the Pfaff map w = z/(z-1) in [0, 1):
///   F(a, conj(a); c; z) = Re[(1-z)^(-a) F(a, c - conj(a); c; w)],
/// which is real by construction. Throws NumericalError (with the achieved
/// tolerance) if the term cap is hit; that happens once 1 - w = 1/(1 - z)
/// drops below roughly 1e-7.
SeriesResult hyp2f1_conjugate_detail(double re_a, double nu, double c, double z);

double hyp2f1_conjugate(double re_a, double nu, double c, double z);

}  // namespace relosc
