// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/target_system.hpp"

#include <cmath>
#include <complex>

#include "core/errors.hpp"
#include "core/specfun.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dyonmap;

namespace {

QuantumNumbers headline(int N = 0, std::int64_t n = -1800) {
  QuantumNumbers q;
  q.mu = HalfInt(7);
  q.j = HalfInt::from_twice(13);
  q.m = HalfInt::from_twice(13);
  q.N = N;
  q.n = n;
  return q;
}

QuantumNumbers free_case() {
  QuantumNumbers q;
  q.mu = HalfInt(0);
  q.N = 0;
  q.n = 0;
  return q;
}

}  // namespace

TEST_CASE("quantum number validation") {
  CHECK_NOTHROW(headline().validate());
  CHECK_NOTHROW(free_case().validate());
  auto bad = headline();
  bad.j = HalfInt(7);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = headline();
  bad.m = HalfInt::from_twice(15);  // > j
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = headline();
  bad.n = 5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = headline();
  bad.m = HalfInt(6);  // m - j not an integer
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("energy level: values and structure") {
  CHECK(energy_level(free_case()) == 0.0);
  // High-precision oracle in extended precision with a different operation order.
  const long double oracle =
      -((1800.0L / 137.0L) * (1800.0L / 137.0L)) / 2.0L;
  const double got = energy_level(headline());
  CHECK(std::abs(got - static_cast<double>(oracle)) <=
        1e-12 * std::abs(static_cast<double>(oracle)));
  CHECK(got == doctest::Approx(-86.3125).epsilon(5e-6));

  const long double oracle2 =
      -((2800.0L / 137.0L) * (2800.0L / 137.0L)) / (2.0L * 16.0L);
  const double got2 = energy_level(headline(3, -2800));
  CHECK(std::abs(got2 - static_cast<double>(oracle2)) <=
        1e-12 * std::abs(static_cast<double>(oracle2)));
  CHECK(got2 == doctest::Approx(-13.0535).epsilon(5e-5));

  // Monotone increasing toward zero in N.
  double prev = energy_level(headline(0));
  for (int N = 1; N <= 10; ++N) {
    const double e = energy_level(headline(N));
    CHECK(e > prev);
    CHECK(e < 0.0);
    prev = e;
  }
}

TEST_CASE("wavenumber: definition identity") {
  CHECK(wavenumber(free_case()) == 0.0);
  const auto q = headline();
  const double k = wavenumber(q);
  CHECK(k == doctest::Approx(13.13869).epsilon(1e-6));
  oracles::Sampler s(7);
  for (int i = 0; i < 20; ++i) {
    auto qq = headline(s.uniform_int(0, 6), -100 * s.uniform_int(1, 30));
    const double kk = wavenumber(qq);
    CHECK(std::abs(kk * kk + 2.0 * qq.m0 * energy_level(qq)) <= 1e-12 * kk * kk);
  }
}

TEST_CASE("radial amplitude: ground state is a pure exponential") {
  const auto q = headline(0);
  const double k = wavenumber(q);
  const double r0 = 0.2;
  for (double r : {0.25, 0.35, 0.5}) {
    const double ratio = radial_wavefunction(r, q) / radial_wavefunction(r0, q);
    CHECK(ratio == doctest::Approx(std::exp(-k * (r - r0))).epsilon(1e-12));
  }
}

TEST_CASE("radial amplitude: N = 1 node sits at r = 1/k") {
  const auto q = headline(1);
  const double k = wavenumber(q);
  const double scale = std::abs(radial_wavefunction(0.5 / k, q));
  CHECK(std::abs(radial_wavefunction(1.0 / k, q)) < 1e-12 * scale);
  CHECK_THROWS_AS(radial_log_derivative(1.0 / k, q), node_error);
}

TEST_CASE("radial log-derivative") {
  const auto q0 = headline(0);
  CHECK(radial_log_derivative(0.3, q0) == doctest::Approx(-wavenumber(q0)).epsilon(1e-14));

  // Finite-difference oracle away from nodes, N = 2.
  const auto q2 = headline(2);
  const double h = 1e-6;
  for (double r : {0.05, 0.2, 0.55}) {
    const double fd = (std::log(std::abs(radial_wavefunction(r + h, q2))) -
                       std::log(std::abs(radial_wavefunction(r - h, q2)))) /
                      (2 * h);
    CHECK(radial_log_derivative(r, q2) == doctest::Approx(fd).epsilon(1e-8));
  }

  // Free case: constant amplitude.
  CHECK(radial_log_derivative(0.3, free_case()) == 0.0);
}

TEST_CASE("radial equation residual: attractive convention solves, literal fails") {
  for (int N = 0; N <= 5; ++N) {
    const auto q = headline(N);
    double worst = 0.0;
    for (int i = 0; i <= 30; ++i) {
      const double r = 0.05 + (2.0 - 0.05) * i / 30.0;
      try {
        worst = std::max(worst, radial_equation_residual(r, q, +1));
      } catch (const node_error&) {
      }
    }
    CHECK(worst < 1e-8);
  }
  // Signed-charge orientation: the 1/r terms no longer cancel.
  CHECK(radial_equation_residual(0.3, headline(0), -1) > 1e-2);
  // n = 0: constant amplitude, zero energy: residual identically zero.
  CHECK(radial_equation_residual(0.3, free_case(), +1) == 0.0);
  CHECK(radial_equation_residual(0.3, free_case(), -1) == 0.0);
}

TEST_CASE("angular spinor: coefficients") {
  const auto q = headline();
  // (mu - m + 1/2)/(2mu + 1) = 1/15, (mu + m + 1/2)/(2mu + 1) = 14/15.
  const auto om = angular_spinor(q, 0.9, 0.0);
  const auto y_up = specfun::monopole_harmonic(q.mu, q.mu, q.m - half_one(), 0.9, 0.0);
  const auto y_dn = specfun::monopole_harmonic(q.mu, q.mu, q.m + half_one(), 0.9, 0.0);
  CHECK((om[0] / y_up).real() == doctest::Approx(-std::sqrt(1.0 / 15.0)).epsilon(1e-14));
  CHECK((om[1] / y_dn).real() == doctest::Approx(std::sqrt(14.0 / 15.0)).epsilon(1e-14));

  // Sum of squared coefficients is exactly 1 for every valid (mu, m).
  for (std::int64_t twice_m = -13; twice_m <= 13; twice_m += 2) {
    auto qq = q;
    qq.m = HalfInt::from_twice(twice_m);
    const double up = (qq.mu - qq.m + half_one()).value() / (2.0 * qq.mu.value() + 1.0);
    const double dn = (qq.mu + qq.m + half_one()).value() / (2.0 * qq.mu.value() + 1.0);
    CHECK(up + dn == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(up >= 0.0);
    CHECK(dn >= 0.0);
  }
}

TEST_CASE("angular spinor: azimuthal eigenvalues by finite differences") {
  const auto q = headline();
  const double th = 1.1, ph = 0.4, h = 5e-4;
  const auto om = angular_spinor(q, th, ph);
  for (int comp = 0; comp < 2; ++comp) {
    const double eig =
        (comp == 0 ? q.mu + q.m - half_one() : q.mu + q.m + half_one()).value();
    auto f = [&](double p) { return angular_spinor(q, th, p)[comp]; };
    const std::complex<double> d =
        (-f(ph + 2 * h) + 8.0 * f(ph + h) - 8.0 * f(ph - h) + f(ph - 2 * h)) / (12.0 * h);
    const std::complex<double> expect = std::complex<double>(0.0, eig) * om[comp];
    CHECK(std::abs(d - expect) <= 1e-8 * std::abs(expect));
  }
}

TEST_CASE("bound-state spinor: separability and factor oracle") {
  const auto q = headline();
  const double r = 0.3, th = M_PI / 6.0, ph = 0.0;
  const auto psi = bound_state_spinor(r, th, ph, q);
  const auto omega = angular_spinor(q, th, ph);
  const double F = radial_wavefunction(r, q);
  CHECK(std::abs(psi[0] - F * omega[0]) <= 1e-15 * std::abs(psi[0]));
  CHECK(std::abs(psi[1] - F * omega[1]) <= 1e-15 * std::abs(psi[1]));

  // The component ratio carries no r dependence.
  const auto psi2 = bound_state_spinor(0.45, th, ph, q);
  CHECK(std::abs(psi[1] / psi[0] - psi2[1] / psi2[0]) < 1e-12 * std::abs(psi[1] / psi[0]));

  // And the radial ratio carries no angular dependence.
  const auto psiA = bound_state_spinor(0.3, 0.7, 1.1, q);
  const auto psiB = bound_state_spinor(0.45, 0.7, 1.1, q);
  CHECK(std::abs(psiA[0] / psiB[0] - psi[0] / psi2[0]) <
        1e-12 * std::abs(psi[0] / psi2[0]));
}
