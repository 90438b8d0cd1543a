// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_ODE_SOLVER_HPP
#define DYONMAP_ODE_SOLVER_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace dyonmap {

enum class TerminationKind { ReachedEnd, BlowUp, MassVanished, StepUnderflow, RadialNode };

const char* to_string(TerminationKind k);

struct Termination {
  TerminationKind kind = TerminationKind::ReachedEnd;
  double r_event = 0.0;  // where integration stopped (== r_end for ReachedEnd)
};

struct IntegratorOptions {
  double rel_tol = 1e-10;
  // Tight enough that states near the mass floor (1e-8) still carry ~1e-6
  // relative accuracy; residual checks depend on this.
  double abs_tol = 1e-14;
  double blowup_threshold = 1e6;  // |M| >= threshold stops with BlowUp
  double mass_floor = 1e-8;       // M <= floor stops with MassVanished; <= 0 disables
};

/// Solved mass distribution over one integration direction: accepted-step
/// nodes (r, M, M') plus per-step dense interpolation good for M, M' and,
/// by differentiating the M' interpolant, M''.
class MassProfile {
 public:
  struct State {
    double M = 0.0, dM = 0.0, d2M = 0.0;
  };

  double r_start() const { return r_start_; }
  double r_stop() const { return r_stop_; }
  double r_lo() const { return std::min(r_start_, r_stop_); }
  double r_hi() const { return std::max(r_start_, r_stop_); }
  bool forward() const { return r_stop_ >= r_start_; }
  bool covers(double r) const { return r >= r_lo() - 1e-14 && r <= r_hi() + 1e-14; }
  bool covers(double lo, double hi) const { return covers(lo) && covers(hi); }

  /// Dense evaluation anywhere in [r_lo, r_hi]; throws std::out_of_range outside.
  State eval(double r) const;

  /// Accepted-step nodes (r, M, M'), in integration order (strictly monotone in r).
  const std::vector<std::array<double, 3>>& nodes() const { return nodes_; }

  const Termination& termination() const { return termination_; }
  int steps() const { return static_cast<int>(steps_.size()); }

 private:
  // Two-point quintic Hermite per step, built from the exact endpoint triples
  // (M, M', M''): sixth-order accurate in M, fourth-order in M''.
  struct Step {
    double r0 = 0.0, h = 0.0;
    std::array<double, 6> c{};  // monomial coefficients of M(s), s in [0,1]
  };

  friend class Dopri5;
  double r_start_ = 0.0, r_stop_ = 0.0;
  std::vector<Step> steps_;
  std::vector<std::array<double, 3>> nodes_;
  Termination termination_;
};

/// Second-order right-hand side: M'' = rhs(r, M, M'). May throw node_error
/// (maps to RadialNode termination) or mass_singularity_error.
using Rhs = std::function<double(double r, double M, double dM)>;

/// Adaptive embedded Dormand-Prince 5(4) integration of M'' = rhs(r, M, M')
/// from (r_start, M0, dM0) toward r_end (either direction), with PI step
/// control, dense output, and event detection (blow-up, mass floor, step
/// underflow, radial nodes). Event locations are refined by bisection on the
/// dense output to 1e-10 in r.
MassProfile integrate_ivp(const Rhs& rhs, double r_start, double M0, double dM0,
                          double r_end, const IntegratorOptions& opts = {});

}  // namespace dyonmap

#endif
