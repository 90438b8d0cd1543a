// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_SPECFUN_HPP
#define DYONMAP_SPECFUN_HPP

#include <complex>
#include <cstdint>

#include "core/half_int.hpp"

namespace dyonmap::specfun {

/// log(n!) for n >= 0.
double log_factorial(std::int64_t n);

/// Generalized binomial coefficient C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!
/// for real alpha and integer k >= 0. Zero when the product hits zero, which
/// is what makes the Jacobi finite sum valid for negative integer parameters.
double binomial(double alpha, std::int64_t k);

/// Jacobi polynomial P_n^{(a,b)}(x) by the explicit finite sum
///   sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}.
/// Valid for all real a, b including the negative integer parameters needed
/// by the monopole harmonics.
double jacobi_poly(int n, double a, double b, double x);

/// Truncated confluent hypergeometric series 1F1(-N; b; x), a degree-N
/// polynomial, summed term by term. Throws std::domain_error when b is a
/// nonpositive integer (Pochhammer pole).
double kummer_poly(int N, double b, double x);

/// d/dx 1F1(-N; b; x) = (-N/b) 1F1(-(N-1); b+1; x).
double kummer_poly_derivative(int N, double b, double x);

/// d^2/dx^2 1F1(-N; b; x).
double kummer_poly_second_derivative(int N, double b, double x);

/// Monopole (generalized spherical) harmonic Y_{mu,l,m'}(theta, phi) with
/// phase e^{i(m'+mu)phi}. Reduces to the standard spherical harmonic
/// (Condon-Shortley phase) at mu = 0 and is unit-normalized on the sphere.
///
/// Requires l-mu, l+mu, l-m', l+m' to be nonnegative integers and
/// theta strictly inside (0, pi); throws std::domain_error otherwise.
std::complex<double> monopole_harmonic(HalfInt mu, HalfInt l, HalfInt mprime,
                                       double theta, double phi);

}  // namespace dyonmap::specfun

#endif
