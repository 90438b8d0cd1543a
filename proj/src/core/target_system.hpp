// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_TARGET_SYSTEM_HPP
#define DYONMAP_TARGET_SYSTEM_HPP

#include <array>
#include <complex>
#include <cstdint>

#include "core/half_int.hpp"

namespace dyonmap {

/// Quantum numbers of the bound fermion-dyon state in the lowest angular
/// tower j = mu - 1/2. mu = 0 together with n = 0 is allowed as the
/// degenerate free family used by sanity checks.
struct QuantumNumbers {
  HalfInt mu;                     // magnetic charge product e*g, >= 0
  HalfInt j;                      // total angular momentum, = mu - 1/2
  HalfInt m;                      // projection, -j <= m <= j
  int N = 0;                      // radial quantum number, >= 0
  std::int64_t n = 0;             // dyon charge multiple Q = n*e, <= 0
  double alpha_fs = 1.0 / 137.0;  // fine-structure constant
  double m0 = 1.0;                // fermion mass (natural units)

  /// Charge product e*Q = n * alpha_fs (nonpositive for bound states).
  double eQ() const { return static_cast<double>(n) * alpha_fs; }

  void validate() const;  // throws std::invalid_argument
};

/// E_N = -(n alpha)^2 / (2 (N+1)^2); zero when n = 0, negative otherwise.
double energy_level(const QuantumNumbers& q);

/// k = sqrt(-2 m0 E_N) >= 0; zero iff n = 0.
double wavenumber(const QuantumNumbers& q);

/// Radial amplitude F(r) = 2 (|n| alpha / (N+1))^{3/2} e^{-kr} 1F1(-N; 2; 2kr).
/// The magnitude |n alpha| is used under the 3/2 power to keep F real; the
/// constant cancels from every logarithmic-derivative consumer.
double radial_wavefunction(double r, const QuantumNumbers& q);

/// F'(r)/F(r), computed from the polynomial and its derivative. Throws
/// node_error when r sits at (or numerically at) a zero of the Kummer
/// polynomial.
double radial_log_derivative(double r, const QuantumNumbers& q);

/// Relative residual of F'' + (2/r)F' + (2 m0 s |eQ| / r)F + 2 m0 E_N F,
/// normalized by max(|F''|, k^2 |F|). With coulomb_sign = +1 (attractive,
/// bound-state convention) the residual vanishes; with -1 (the literal sign
/// carried by eQ < 0) it does not.
double radial_equation_residual(double r, const QuantumNumbers& q, int coulomb_sign);

/// Two-component angular spinor of the j = mu - 1/2 tower:
///   ( -sqrt((mu-m+1/2)/(2mu+1)) Y_{mu,mu,m-1/2},
///     +sqrt((mu+m+1/2)/(2mu+1)) Y_{mu,mu,m+1/2} ).
std::array<std::complex<double>, 2> angular_spinor(const QuantumNumbers& q,
                                                   double theta, double phi);

/// Full bound-state spinor F(r) * Omega(theta, phi), componentwise.
std::array<std::complex<double>, 2> bound_state_spinor(double r, double theta,
                                                       double phi,
                                                       const QuantumNumbers& q);

}  // namespace dyonmap

#endif
