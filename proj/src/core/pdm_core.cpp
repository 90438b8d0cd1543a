// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/pdm_core.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace dyonmap {

void OrderingParams::validate() const {
  if (std::abs(a + b + c + 1.0) > 1e-12)
    throw std::invalid_argument("ordering parameters must satisfy a + b + c = -1");
  if (b + 1.0 <= 0.0)
    throw std::invalid_argument("ordering with b <= -1 has no kinetic Laplacian term");
}

double effective_potential(double M, double dM, double d2M, double r,
                           const OrderingParams& ordering) {
  if (M <= 0.0) throw mass_singularity_error(r);
  if (r <= 0.0) throw std::domain_error("effective_potential: r must be positive");
  const double lap = d2M + 2.0 * dM / r;
  const double c1 = ordering.laplacian_coeff();
  const double c2 = ordering.gradient_coeff();
  return c1 * lap / (M * M) - c2 * dM * dM / (M * M * M);
}

void MappingParams::validate() const {
  q.validate();
  ordering.validate();
  if (!(theta0 > 0.0 && theta0 < M_PI))
    throw std::invalid_argument("theta0 must lie strictly inside (0, pi)");
  if (sigma_r_eigenvalue != 1 && sigma_r_eigenvalue != -1)
    throw std::invalid_argument("sigma_r_eigenvalue must be +1 or -1");
}

double angular_coefficient(const QuantumNumbers& q, double theta0, SpinBranch branch,
                           int sigma_r_eigenvalue) {
  if (!(theta0 > 0.0 && theta0 < M_PI))
    throw std::domain_error("angular_coefficient: theta0 at a coordinate pole");
  const double mu = q.mu.value();
  const HalfInt w_exact = branch == SpinBranch::Up ? q.mu + q.m - half_one()
                                                   : q.mu + q.m + half_one();
  const double w = w_exact.value();
  const double c = std::cos(theta0);
  const double s2 = std::sin(theta0) * std::sin(theta0);
  const double t1 = (1.0 - c) / s2;
  const double t2 = (1.0 - c) * (1.0 - c) / s2;
  return 4.0 * mu * w * t1 - 2.0 * sigma_r_eigenvalue * mu - 2.0 * mu * mu * t2;
}

double mapping_rhs(double r, double M, double dM, const MappingParams& params,
                   SpinBranch branch) {
  if (r <= 0.0) throw std::domain_error("mapping_rhs: r must be positive");
  if (M <= 0.0) throw mass_singularity_error(r);

  const double A = angular_coefficient(params.q, params.theta0, branch,
                                       params.sigma_r_eigenvalue);
  const double E = energy_level(params.q);
  const double log_deriv = radial_log_derivative(r, params.q);  // may throw node_error
  const double na = static_cast<double>(params.q.n) * params.q.alpha_fs;
  const double coulomb = params.coulomb == CoulombConvention::SignedCharge
                             ? -4.0 * na
                             : -4.0 * std::abs(na);

  const double lap_c = params.ordering.b + 1.0;          // (b+1), 1 for Zhu-Kroemer
  const double grad_c = 2.0 * params.ordering.gradient_coeff();  // 3/2 for Zhu-Kroemer

  const double num = -2.0 * lap_c * dM / r + grad_c * dM * dM / M -
                     2.0 * log_deriv * dM - A * M / (r * r) + coulomb * M / r +
                     2.0 * M * (M - 2.0 * params.q.m0) * E;
  return num / lap_c;
}

ConditionCheck mapping_condition(HalfInt mu, HalfInt m) {
  ConditionCheck out;
  out.value = std::abs((mu + m).value());
  out.margin = std::min(out.value - 10.0, 20.0 - out.value);
  out.satisfied = out.margin >= 0.0;
  return out;
}

}  // namespace dyonmap
