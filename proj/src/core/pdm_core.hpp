// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_PDM_CORE_HPP
#define DYONMAP_PDM_CORE_HPP

#include "core/half_int.hpp"
#include "core/target_system.hpp"

namespace dyonmap {

/// von Roos kinetic-ordering ambiguity parameters, constrained to a+b+c = -1.
struct OrderingParams {
  double a = -0.5;
  double b = 0.0;
  double c = -0.5;

  static OrderingParams zhu_kroemer() { return {-0.5, 0.0, -0.5}; }
  static OrderingParams mustafa_mazharimousavi() { return {-0.25, -0.5, -0.25}; }

  /// Coefficient of laplacian(M)/M^2 in the effective potential: (b+1)/2.
  double laplacian_coeff() const { return 0.5 * (b + 1.0); }
  /// Coefficient of (grad M)^2/M^3: a(a+b+1) + b + 1.
  double gradient_coeff() const { return a * (a + b + 1.0) + b + 1.0; }

  void validate() const;  // throws std::invalid_argument
};

/// Effective potential of the purely kinetic ordered Hamiltonian for a radial
/// mass profile: U = ((b+1)/2)(M'' + 2M'/r)/M^2 - [a(a+b+1)+b+1] (M')^2/M^3.
double effective_potential(double M, double dM, double d2M, double r,
                           const OrderingParams& ordering);

/// The two uncoupled spinor-component equations. Up carries the angular
/// factor (mu + m - 1/2), Down carries (mu + m + 1/2).
enum class SpinBranch { Up, Down };

inline const char* to_string(SpinBranch b) { return b == SpinBranch::Up ? "up" : "down"; }

/// Orientation of the Coulomb term in the mapping equation. SignedCharge
/// keeps 4 n alpha M / r with the sign of n; AbsoluteCharge uses the
/// magnitude 4 |n| alpha M / r, the orientation under which the radial
/// amplitude actually satisfies its radial equation (see
/// radial_equation_residual) and the pointwise operator identity closes.
enum class CoulombConvention { SignedCharge, AbsoluteCharge };

struct MappingParams {
  QuantumNumbers q;
  double theta0 = 0.0;  // radians, strictly inside (0, pi)
  OrderingParams ordering = OrderingParams::zhu_kroemer();
  int sigma_r_eigenvalue = +1;  // enters the angular coefficient; never auto-flipped
  CoulombConvention coulomb = CoulombConvention::SignedCharge;

  void validate() const;
};

/// Combined coefficient of M/r^2 in the mapping equation:
///   A = 4 mu (mu + m -+ 1/2)(1-cos t0)/sin^2 t0 - 2 s mu
///       - 2 mu^2 (1-cos t0)^2 / sin^2 t0,
/// with s = sigma_r_eigenvalue and -+ resolved by the branch.
double angular_coefficient(const QuantumNumbers& q, double theta0, SpinBranch branch,
                           int sigma_r_eigenvalue);

/// Right-hand side of the second-order mapping problem, solved for M''.
/// For the Zhu-Kroemer ordering this is exactly
///   M'' = -(2/r)M' + (3/(2M))(M')^2 - 2(F'/F)M' - A M/r^2 - (4 n alpha / r)M
///         + 2M(M - 2 m0)E_N;
/// general orderings scale the non-Laplacian terms by 1/(b+1).
/// Throws mass_singularity_error when M <= 0 and node_error at radial nodes.
double mapping_rhs(double r, double M, double dM, const MappingParams& params,
                   SpinBranch branch);

/// |mu + m| membership in the closed interval [10, 20] under which the two
/// branch equations are expected to stay close, plus the signed distance to
/// the nearest interval boundary (positive inside).
struct ConditionCheck {
  bool satisfied = false;
  double value = 0.0;   // |mu + m|
  double margin = 0.0;  // min(value - 10, 20 - value)
};

ConditionCheck mapping_condition(HalfInt mu, HalfInt m);

}  // namespace dyonmap

#endif
