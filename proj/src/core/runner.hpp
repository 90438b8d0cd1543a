// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_RUNNER_HPP
#define DYONMAP_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/scenario.hpp"
#include "core/verification.hpp"

namespace dyonmap {

/// Level whose first (lowest-r) crossing quantifies "where the curve sits".
inline constexpr double kCrossingLevel = 10.0;
/// Window and bar for the two-branch agreement metric.
inline constexpr double kAgreementLo = 0.25;
inline constexpr double kAgreementHi = 0.50;
inline constexpr double kAgreementBar = 0.05;

/// Per-spin-branch solve outcome: stitched forward/backward profiles,
/// effective-potential samples over the forward span, residual statistics and
/// termination metadata.
struct BranchResult {
  SpinBranch branch = SpinBranch::Up;
  MassProfile forward;
  MassProfile backward;
  std::vector<std::pair<double, double>> u_eff;  // (r, U) on the forward span
  ResidualReport residual;
  Termination forward_termination;
  Termination backward_termination;
  bool covers_window = false;                 // forward reached r_max
  std::optional<double> crossing_radius;      // smallest r with M = kCrossingLevel

  /// Dense evaluation across the union of both directions.
  MassProfile::State eval(double r) const;
  bool covers(double r) const;
  double r_lo() const;
  double r_hi() const;
};

struct SolveOutcome {
  BranchResult up, down;
  ConditionCheck condition;
  std::optional<double> agreement;  // sup-relative on the agreement window
  nlohmann::json summary;
};

/// Solves both branches forward [r_i, r_max] and backward [r_i, r_min],
/// computes the agreement metric, and (when out_dir is nonempty) writes
/// solve.csv, solve.gp and summary.json.
SolveOutcome run_solve(const ScenarioConfig& cfg, const std::string& out_dir);

/// run_solve plus a 500-point uniform effective-potential table
/// (potential.csv / potential.gp).
SolveOutcome run_potential(const ScenarioConfig& cfg, const std::string& out_dir);

struct SweepEntry {
  int N = 0;
  bool solved = false;
  std::string error;
  std::optional<double> crossing_radius;
  std::optional<double> M_up_at_030;  // probe value for curve-overlap checks
  bool covers_window = false;
};

struct SweepOutcome {
  std::vector<SweepEntry> entries;
  nlohmann::json summary;
};

/// Solves one scenario per radial quantum number, emits per-N CSVs plus a
/// combined file; per-N failures are recorded and the sweep continues.
SweepOutcome run_spectrum_sweep(const ScenarioConfig& cfg, const std::vector<int>& N_list,
                                const std::string& out_dir);

struct CompareEntry {
  std::int64_t n = 0;
  bool solved = false;
  std::string error;
  std::optional<double> crossing_radius;
  bool covers_window = false;
};

struct CompareOutcome {
  std::vector<CompareEntry> entries;
  nlohmann::json summary;
};

/// Overlays profiles for several dyon charge multiples into one CSV.
CompareOutcome run_compare_n(const ScenarioConfig& cfg,
                             const std::vector<std::int64_t>& n_list,
                             const std::string& out_dir);

struct VerifyRow {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool larger_is_fail = true;  // pass when value <= threshold
  bool pass = false;
  std::string detail;
};

struct VerifyOutcome {
  std::vector<VerifyRow> rows;
  bool all_passed = false;
  nlohmann::json summary;
};

/// Runs the full diagnostic battery: radial-equation residuals under both
/// Coulomb sign conventions, the Kummer ODE check, harmonic normalization,
/// azimuthal eigenvalues, both operator-identity diagnostics, and the
/// post-solve equation residual. Prints a pass/fail table to `table`.
VerifyOutcome run_verify(const ScenarioConfig& cfg, const std::string& out_dir,
                         std::string* table = nullptr);

struct FeasibilityEntry {
  std::int64_t n = 0;
  bool completed = false;  // both branches cover [r_i, r_max]
  std::optional<double> r_event_up, r_event_down;
  std::string termination_up, termination_down;
};

struct FeasibilityOutcome {
  std::vector<FeasibilityEntry> entries;
  nlohmann::json summary;
};

/// Downward scan over the dyon charge multiple; records per-n completion.
FeasibilityOutcome run_feasibility(const ScenarioConfig& cfg, std::int64_t n_from,
                                   std::int64_t n_to, std::int64_t n_step,
                                   const std::string& out_dir);

/// Formats a double with 17 significant digits (full round-trip precision).
std::string format_g17(double v);

}  // namespace dyonmap

#endif
