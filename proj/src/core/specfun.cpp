// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dyonmap::specfun {

double log_factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(double alpha, std::int64_t k) {
  if (k < 0) throw std::domain_error("binomial: negative k");
  double p = 1.0;
  for (std::int64_t i = 1; i <= k; ++i) p *= (alpha - static_cast<double>(i) + 1.0) / static_cast<double>(i);
  return p;
}

double jacobi_poly(int n, double a, double b, double x) {
  if (n < 0) throw std::domain_error("jacobi_poly: negative degree");
  const double u = 0.5 * (x - 1.0);
  const double v = 0.5 * (x + 1.0);
  double sum = 0.0;
  for (int s = 0; s <= n; ++s) {
    const double c = binomial(n + a, n - s) * binomial(n + b, s);
    if (c == 0.0) continue;
    sum += c * std::pow(u, s) * std::pow(v, n - s);
  }
  return sum;
}

double kummer_poly(int N, double b, double x) {
  if (N < 0) throw std::domain_error("kummer_poly: negative N");
  // (b)_k vanishes for b a nonpositive integer before the series truncates.
  if (b <= 0.0 && b == std::floor(b)) throw std::domain_error("kummer_poly: Pochhammer pole at b = " + std::to_string(b));
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < N; ++k) {
    term *= (static_cast<double>(-N + k) / ((b + k) * (k + 1))) * x;
    sum += term;
  }
  return sum;
}

double kummer_poly_derivative(int N, double b, double x) {
  if (N == 0) return 0.0;
  return (-static_cast<double>(N) / b) * kummer_poly(N - 1, b + 1.0, x);
}

double kummer_poly_second_derivative(int N, double b, double x) {
  if (N <= 1) return 0.0;
  return (static_cast<double>(N) * (N - 1) / (b * (b + 1.0))) * kummer_poly(N - 2, b + 2.0, x);
}

std::complex<double> monopole_harmonic(HalfInt mu, HalfInt l, HalfInt mprime,
                                       double theta, double phi) {
  const HalfInt lm_mu = l - mu, lp_mu = l + mu;
  const HalfInt lm_mp = l - mprime, lp_mp = l + mprime;
  if (!lm_mu.is_nonneg_integer() || !lp_mu.is_nonneg_integer() ||
      !lm_mp.is_nonneg_integer() || !lp_mp.is_nonneg_integer()) {
    throw std::domain_error("monopole_harmonic: (mu=" + mu.str() + ", l=" + l.str() +
                            ", m'=" + mprime.str() + ") indices are not nonnegative integers");
  }
  if (!(theta > 0.0 && theta < M_PI)) {
    throw std::domain_error("monopole_harmonic: theta at a coordinate pole");
  }

  const double x = std::cos(theta);
  const double mp = mprime.value(), q = mu.value();

  // Normalization radicand is a ratio of factorials, nonnegative by the
  // integrality preconditions; go through logs so l +- mu up to ~30 is safe.
  const double log_norm =
      0.5 * (std::log(2.0 * l.value() + 1.0) + log_factorial(lm_mp.as_integer()) +
             log_factorial(lp_mp.as_integer()) - std::log(4.0 * M_PI) -
             log_factorial(lm_mu.as_integer()) - log_factorial(lp_mu.as_integer()));

  const int n = static_cast<int>(lp_mp.as_integer());
  const double pj = jacobi_poly(n, -q - mp, q - mp, x);
  const double theta_factor =
      std::pow(1.0 - x, -0.5 * (q + mp)) * std::pow(1.0 + x, 0.5 * (q - mp));
  const double amp = std::exp2(mp) * std::exp(log_norm) * theta_factor * pj;
  const double arg = (mp + q) * phi;
  return {amp * std::cos(arg), amp * std::sin(arg)};
}

}  // namespace dyonmap::specfun
