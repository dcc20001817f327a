#include <cmath>
#include <random>

#include "doctest.h"
#include "relosc/errors.hpp"
#include "relosc/spectra.hpp"

using namespace relosc;

namespace {
const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("level index decomposition") {
  for (unsigned n = 0; n < 50; ++n) {
    const LevelIndex i{n};
    CHECK(2 * i.n_s() + i.s() == n);
    CHECK(i.s() <= 1);
  }
}

TEST_CASE("pt_level") {
  const ModelParams rho(1, 1, -1);
  CHECK(pt_level(rho, {0}) == doctest::Approx(kGolden).epsilon(1e-14));
  CHECK(pt_level(rho, {3}) == doctest::Approx(kGolden + 3).epsilon(1e-14));

  // eps = 0.5, omega_hat = 0.5, k from the quadratic with ratio 16
  const ModelParams p(1, 1, -0.25);
  const double k = 0.5 * (1 + std::sqrt(65.0));
  CHECK(pt_level(p, {0}) == doctest::Approx(std::sqrt(1 + 0.25 * k)).epsilon(1e-14));

  double prev = 0;
  for (unsigned n = 0; n < 40; ++n) {
    const double e = pt_level(p, {n});
    CHECK(e > prev);
    CHECK(e >= p.m());
    prev = e;
  }
  CHECK_THROWS_AS(pt_level(ModelParams(1, 1, 1), {0}), ParameterError);
}

TEST_CASE("rm_level and n_max") {
  const ModelParams p(1, 1, 1);
  CHECK(rm_level(p, {0}) == doctest::Approx(std::sqrt(kGolden)).epsilon(1e-14));
  CHECK(rm_level(p, {0}) == doctest::Approx(1.2720196495).epsilon(1e-10));
  CHECK(n_max(p) == 0);
  CHECK_THROWS_AS(rm_level(p, {1}), NoSuchLevel);
  try {
    rm_level(p, {1});
  } catch (const NoSuchLevel& e) {
    CHECK(e.n_max() == 0);
  }

  // k' = 2 exactly: k'(k'+1) = 6 with eps = omega = 1 needs m = sqrt(6)
  CHECK(shape_k_prime(ModelParams(std::sqrt(6.0), 1, 1)).value == doctest::Approx(2.0));
  // k' = 3.5: ratio 3.5 * 4.5
  CHECK(n_max(ModelParams(std::sqrt(3.5 * 4.5), 1, 1)) == 3);

  const ModelParams heavy(10, 1, 1);
  const double edge = continuum_threshold(heavy);
  CHECK(edge == doctest::Approx(10 * std::sqrt(2.0)));
  double prev = 0;
  for (long n = 0; n <= n_max(heavy); ++n) {
    const double e = rm_level(heavy, {static_cast<unsigned>(n)});
    CHECK(e > prev);
    CHECK(e >= heavy.m());
    CHECK(e < edge);
    prev = e;
  }
  CHECK_THROWS_AS(n_max(ModelParams(1, 1, -1)), ParameterError);
}

TEST_CASE("n_max uses the strict inequality n < k' at integer k'") {
  // choose m so that k' is an exact small integer in floating point
  for (int target = 1; target <= 6; ++target) {
    const ModelParams p(std::sqrt(double(target) * (target + 1)), 1, 1);
    const double kp = shape_k_prime(p).value;
    if (kp == double(target)) {
      CHECK(n_max(p) == target - 1);
    }
  }
}

TEST_CASE("continuum threshold and wavenumber") {
  CHECK(continuum_threshold(ModelParams(1, 1, 1)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(continuum_threshold(ModelParams(1, 1, 4)) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
  CHECK(continuum_threshold(ModelParams(1, 1, 1e12)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(continuum_threshold(ModelParams(1, 1, -1)), ParameterError);
  CHECK_THROWS_AS(continuum_threshold(ModelParams(1, 1, 0)), ParameterError);

  const ModelParams p(1, 1, 1);
  CHECK(wavenumber_nu(p, continuum_threshold(p)) == 0.0);
  CHECK(wavenumber_nu(p, 2.0) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(wavenumber_nu(p, 1.4), ParameterError);
}

TEST_CASE("flat_level") {
  const ModelParams p(1, 1, 0);
  CHECK(flat_level(p, {0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(flat_level(p, {1}) == doctest::Approx(2.0).epsilon(1e-15));
  for (unsigned n = 0; n < 5; ++n) {
    CHECK(flat_level(ModelParams(1, 1e-14, 0), {n}) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(flat_level(ModelParams(1, 1, 0.1), {0}), ParameterError);
}

TEST_CASE("spectrum_report") {
  const auto rm = spectrum_report(ModelParams(1, 1, 1), 10);
  CHECK(rm.regime.tag == RegimeTag::RM);
  REQUIRE(rm.levels.size() == 1);
  CHECK(rm.threshold.value() == doctest::Approx(std::sqrt(2.0)));
  CHECK(rm.n_max.value() == 0);

  const auto pt = spectrum_report(ModelParams(1, 1, -1), 3);
  CHECK(pt.regime.is_rho);
  REQUIRE(pt.levels.size() == 3);
  for (unsigned n = 0; n < 3; ++n) {
    CHECK(pt.levels[n].energy == doctest::Approx(kGolden + n).epsilon(1e-14));
  }
  CHECK_FALSE(pt.threshold.has_value());

  const auto flat = spectrum_report(ModelParams(1, 1, 0), 2);
  REQUIRE(flat.levels.size() == 2);
  CHECK(flat.levels[0].energy == doctest::Approx(std::sqrt(2.0)));
  CHECK(flat.levels[1].energy == doctest::Approx(2.0));
  CHECK_FALSE(flat.shape.has_value());
}

TEST_CASE("RHO degeneracy of the general PT formula") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.05, 20.0);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p(unif(rng), unif(rng), -1);
    const double k = shape_k(p).value;
    for (unsigned n = 0; n <= 20; ++n) {
      CHECK(pt_level(p, {n}) == doctest::Approx(p.omega_hat() * (k + n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("continuity at lambda = 0") {
  const double m = 1, w = 1;
  const ModelParams flat(m, w, 0);
  for (unsigned n = 0; n <= 2; ++n) {
    double prev_pt = INFINITY, prev_rm = INFINITY;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      const double ef = flat_level(flat, {n});
      const double dpt = std::fabs(std::pow(pt_level(ModelParams(m, w, -eps * eps), {n}), 2) - ef * ef);
      const double drm = std::fabs(std::pow(rm_level(ModelParams(m, w, eps * eps), {n}), 2) - ef * ef);
      CHECK(dpt < prev_pt);
      CHECK(drm < prev_rm);
      prev_pt = dpt;
      prev_rm = drm;
    }
    CHECK(prev_pt < 1e-4 * m * m);
    CHECK(prev_rm < 1e-4 * m * m);
  }
  const double eps = 1e-2;
  CHECK(std::fabs(eps * eps * shape_k(ModelParams(m, w, -eps * eps)).value - m / w) < 1e-2 * m / w);
  CHECK(std::fabs(eps * eps * shape_k_prime(ModelParams(m, w, eps * eps)).value - m / w) <
        1e-2 * m / w);
}

TEST_CASE("decay radius") {
  CHECK(decay_radius(ModelParams(1, 1, -1), 3, 1e-10) == doctest::Approx(std::acos(0.0)));
  const ModelParams rm(10, 1, 1);
  const double kp = shape_k_prime(rm).value;
  for (unsigned n = 0; n <= 9; ++n) {
    const double x = decay_radius(rm, n, 1e-10);
    CHECK(std::pow(std::cosh(x), -(kp - n)) <= 1e-10 * (1 + 1e-12));
  }
  CHECK_THROWS_AS(decay_radius(rm, 10, 1e-10), NoSuchLevel);
  const double xf = decay_radius(ModelParams(1, 1, 0), 0, 1e-10);
  CHECK(std::exp(-0.5 * xf * xf) < 1e-10);
}
