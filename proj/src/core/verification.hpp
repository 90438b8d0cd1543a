// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_VERIFICATION_HPP
#define DYONMAP_VERIFICATION_HPP

#include <complex>
#include <functional>
#include <string>

#include "core/ode_solver.hpp"
#include "core/pdm_core.hpp"

namespace dyonmap {

struct ResidualReport {
  double max_rel = 0.0;
  double location_of_max = 0.0;
  int samples = 0;    // requested sample count
  int evaluated = 0;  // samples actually evaluated (nodes are skipped)
  std::string notes;
};

/// Residual of the mapping equation along a solved profile, evaluated at
/// Chebyshev-distributed interior points from dense-output M, M', M''. The
/// equation terms are reassembled here, independently of mapping_rhs, and the
/// residual is normalized by the largest term magnitude.
ResidualReport ode_residual(const MassProfile& profile, const MappingParams& params,
                            SpinBranch branch, int sample_count);

/// Same residual for an arbitrary state evaluator over [r_lo, r_hi]
/// (sensitivity checks against corrupted profiles).
ResidualReport ode_residual_of(const std::function<MassProfile::State(double)>& state,
                               double r_lo, double r_hi, const MappingParams& params,
                               SpinBranch branch, int sample_count);

/// sup over a uniform grid of |M_up - M_down| / max(M_up, M_down) on
/// [r_lo, r_hi]. Throws std::out_of_range when a profile does not cover the span.
double branch_agreement(const MassProfile& up, const MassProfile& down, double r_lo,
                        double r_hi, int grid);

/// Finite-difference action of the polar-angle part of the Laplacian on one
/// harmonic: returns c with
///   [D_theta + d^2_phi/sin^2] Y = [azimuthal term + mu^2(1-cos)^2/sin^2] Y + c Y,
/// where the azimuthal term uses the exact d_phi eigenvalue i(m'+mu).
/// For the l = mu spinor harmonics c should equal s*mu; for mu = 0 it should
/// equal -l(l+1).
std::complex<double> angular_action_coefficient(HalfInt mu, HalfInt l, HalfInt mprime,
                                                double theta, double phi, double fd_step);

struct OperatorCheck {
  double s_up = 0.0;    // measured coefficient / mu, upper component
  double s_down = 0.0;  // lower component
  double spread = 0.0;  // max deviation from the two means incl. imaginary parts
};

/// Measures the residual coefficient s (in s*mu*Omega) on both spinor
/// components by central finite differences. Requires mu >= 1/2.
OperatorCheck angular_operator_check(const QuantumNumbers& q, double theta, double phi,
                                     double fd_step);

struct IdentityCheck {
  int closing_sign = 0;      // +1 or -1: the hypothesis with smaller residual
  double residual_plus = 0.0;   // identity residual under sigma.r = +1
  double residual_minus = 0.0;  // under sigma.r = -1
  std::string notes;
};

/// Evaluates mu^2 - L^2 on the spinor by finite differences and tests which
/// sign hypothesis for the reduced right side (+-mu Omega) closes the
/// operator identity. Residuals are relative to mu*|Omega|.
IdentityCheck k2_identity_check(const QuantumNumbers& q, double theta, double phi,
                                double fd_step);

/// Full ordered-kinetic operator applied to psi = F*Omega at one point, minus
/// E_N psi: radial derivatives analytic, angular by finite differences, mass
/// terms from dense output. Normalized by |E_N psi| (largest-term scale when
/// E_N = 0). The identity chain closes only on the cone theta = theta0 and
/// only under the self-consistent convention (sigma_r_eigenvalue = -1 with
/// the bound-state Coulomb orientation).
std::complex<double> pde_residual_at_point(const MassProfile& profile,
                                           const MappingParams& params, SpinBranch branch,
                                           double r, double theta, double phi,
                                           double fd_step);

}  // namespace dyonmap

#endif
