// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/target_system.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/specfun.hpp"

namespace dyonmap {

void QuantumNumbers::validate() const {
  if (mu.twice() < 0) throw std::invalid_argument("mu must be nonnegative");
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  if (n > 0) throw std::invalid_argument("n must be nonpositive (bound state)");
  if (alpha_fs <= 0.0) throw std::invalid_argument("alpha_fs must be positive");
  if (m0 <= 0.0) throw std::invalid_argument("m0 must be positive");
  if (mu.twice() == 0) return;  // degenerate free family: no angular tower
  if (j != mu - half_one()) throw std::invalid_argument("j must equal mu - 1/2");
  if (m.twice() < -j.twice() || m.twice() > j.twice())
    throw std::invalid_argument("m out of range [-j, j]");
  if (!(m - j).is_integer()) throw std::invalid_argument("m - j must be an integer");
  // ell(j, mu) = sqrt((j+1/2)^2 - mu^2) vanishes identically on this tower.
}

double energy_level(const QuantumNumbers& q) {
  if (q.n == 0) return 0.0;
  const double na = static_cast<double>(q.n) * q.alpha_fs;
  const double np1 = static_cast<double>(q.N) + 1.0;
  return -(na * na) / (2.0 * np1 * np1);
}

double wavenumber(const QuantumNumbers& q) {
  const double e = energy_level(q);
  const double rad = -2.0 * q.m0 * e;
  if (rad < 0.0) throw std::logic_error("wavenumber: negative radicand");
  return std::sqrt(rad);
}

double radial_wavefunction(double r, const QuantumNumbers& q) {
  if (r <= 0.0) throw std::domain_error("radial_wavefunction: r must be positive");
  if (q.n == 0) return 2.0;  // free case: constant amplitude, unit-scale convention
  const double k = wavenumber(q);
  const double scale = std::abs(static_cast<double>(q.n)) * q.alpha_fs / (q.N + 1.0);
  const double c = 2.0 * std::pow(scale, 1.5);
  return c * std::exp(-k * r) * specfun::kummer_poly(q.N, 2.0, 2.0 * k * r);
}

double radial_log_derivative(double r, const QuantumNumbers& q) {
  if (r <= 0.0) throw std::domain_error("radial_log_derivative: r must be positive");
  const double k = wavenumber(q);
  if (k == 0.0) return 0.0;  // constant amplitude
  const double x = 2.0 * k * r;
  const double L = specfun::kummer_poly(q.N, 2.0, x);
  const double Lp = specfun::kummer_poly_derivative(q.N, 2.0, x);
  // Node guard: |L| measured against the local polynomial scale.
  const double scale = 1.0 + std::abs(x * Lp);
  if (std::abs(L) < 1e-12 * scale) throw node_error(r);
  return -k + 2.0 * k * Lp / L;
}

double radial_equation_residual(double r, const QuantumNumbers& q, int coulomb_sign) {
  if (r <= 0.0) throw std::domain_error("radial_equation_residual: r must be positive");
  if (coulomb_sign != 1 && coulomb_sign != -1)
    throw std::invalid_argument("coulomb_sign must be +1 or -1");
  const double k = wavenumber(q);
  const double E = energy_level(q);
  const double x = 2.0 * k * r;
  const double L = specfun::kummer_poly(q.N, 2.0, x);
  const double Lp = specfun::kummer_poly_derivative(q.N, 2.0, x);
  const double Lpp = specfun::kummer_poly_second_derivative(q.N, 2.0, x);
  // F = e^{-kr} L(2kr) up to the constant, which drops from the residual scale.
  const double F = L;
  const double Fp = -k * L + 2.0 * k * Lp;
  const double Fpp = k * k * L - 4.0 * k * k * Lp + 4.0 * k * k * Lpp;
  const double abs_eQ = std::abs(q.eQ());
  const double expr = Fpp + (2.0 / r) * Fp + (2.0 * q.m0 * coulomb_sign * abs_eQ / r) * F +
                      2.0 * q.m0 * E * F;
  const double scale = std::max(std::abs(Fpp), k * k * std::abs(F));
  if (expr == 0.0) return 0.0;
  if (scale == 0.0) return std::abs(expr);
  return std::abs(expr) / scale;
}

std::array<std::complex<double>, 2> angular_spinor(const QuantumNumbers& q,
                                                   double theta, double phi) {
  const HalfInt two_mu_p1 = q.mu + q.mu + HalfInt(1);
  const HalfInt up_num = q.mu - q.m + half_one();
  const HalfInt dn_num = q.mu + q.m + half_one();
  // Coefficient radicands are ratios of the same half-integer denominators;
  // exact via the doubled representation.
  const double c_up = -std::sqrt(static_cast<double>(up_num.twice()) /
                                 static_cast<double>(two_mu_p1.twice()));
  const double c_dn = std::sqrt(static_cast<double>(dn_num.twice()) /
                                static_cast<double>(two_mu_p1.twice()));
  const auto y_up = specfun::monopole_harmonic(q.mu, q.mu, q.m - half_one(), theta, phi);
  const auto y_dn = specfun::monopole_harmonic(q.mu, q.mu, q.m + half_one(), theta, phi);
  return {c_up * y_up, c_dn * y_dn};
}

std::array<std::complex<double>, 2> bound_state_spinor(double r, double theta,
                                                       double phi,
                                                       const QuantumNumbers& q) {
  const double F = radial_wavefunction(r, q);
  auto omega = angular_spinor(q, theta, phi);
  return {F * omega[0], F * omega[1]};
}

}  // namespace dyonmap
