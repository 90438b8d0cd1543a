// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_SCENARIO_HPP
#define DYONMAP_SCENARIO_HPP

#include <cstdint>
#include <set>
#include <string>

#include "core/ode_solver.hpp"
#include "core/pdm_core.hpp"

#include "json.hpp"

namespace dyonmap {

/// One experiment: quantum numbers, cone angle, initial-value data,
/// integration window, tolerances, ordering and sign conventions. Defaults
/// are the headline bound-state scenario. Parsed from line-oriented
/// `key = value` text with `#` comments; half-integers are written as
/// fractions ("m = 13/2") and parsed exactly.
struct ScenarioConfig {
  HalfInt mu = HalfInt(7);
  HalfInt j = HalfInt::from_twice(13);
  HalfInt m = HalfInt::from_twice(13);
  int N = 0;
  std::int64_t n = -1800;
  double alpha_fs = 1.0 / 137.0;
  double m0 = 1.0;
  double theta0_deg = 30.0;
  double r_i = 0.20;
  double M_i = 1.0;
  double dM_i = 0.0;
  double r_min = 0.01;
  double r_max = 0.50;
  std::string ordering = "zhu-kroemer";  // or "mustafa-mazharimousavi"
  int sigma_r_eigenvalue = +1;
  std::string coulomb_convention = "signed";  // or "absolute"
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  double blowup_threshold = 1e6;
  double mass_floor = 1e-8;
  std::uint64_t seed = 0;

  std::set<std::string> explicitly_set;

  static ScenarioConfig parse_file(const std::string& path);
  static ScenarioConfig parse_string(const std::string& text);

  /// Applies one `key=value` override; throws config_error on unknown keys or
  /// unparsable values.
  void set(const std::string& key, const std::string& value, int line = 0);

  bool was_set(const std::string& key) const { return explicitly_set.count(key) > 0; }

  void validate() const;  // throws config_error

  QuantumNumbers quantum_numbers() const;
  MappingParams mapping_params() const;
  IntegratorOptions integrator_options() const;

  /// Resolved configuration with all defaults materialized.
  nlohmann::json to_json() const;
};

}  // namespace dyonmap

#endif
