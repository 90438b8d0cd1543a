// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace dyonmap {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& v, const std::string& key, int line) {
  // Accept exact fractions for real-valued keys too ("alpha_fs = 1/137").
  const auto slash = v.find('/');
  try {
    std::size_t used = 0;
    if (slash != std::string::npos) {
      const double num = std::stod(v.substr(0, slash));
      const double den = std::stod(v.substr(slash + 1));
      if (den == 0.0) throw std::invalid_argument("zero denominator");
      return num / den;
    }
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::logic_error&) {
    throw config_error("value for '" + key + "' is not a number: '" + v + "'", line);
  }
}

std::int64_t parse_int(const std::string& v, const std::string& key, int line) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::logic_error&) {
    throw config_error("value for '" + key + "' is not an integer: '" + v + "'", line);
  }
}

HalfInt parse_half(const std::string& v, const std::string& key, int line) {
  try {
    return HalfInt::parse(v);
  } catch (const std::invalid_argument&) {
    throw config_error("value for '" + key + "' is not a half-integer: '" + v + "'", line);
  }
}

}  // namespace

void ScenarioConfig::set(const std::string& key, const std::string& value, int line) {
  const std::string v = trim(value);
  if (v.empty()) throw config_error("empty value for '" + key + "'", line);
  if (key == "mu") mu = parse_half(v, key, line);
  else if (key == "j") j = parse_half(v, key, line);
  else if (key == "m") m = parse_half(v, key, line);
  else if (key == "N") N = static_cast<int>(parse_int(v, key, line));
  else if (key == "n") n = parse_int(v, key, line);
  else if (key == "alpha_fs") alpha_fs = parse_real(v, key, line);
  else if (key == "m0") m0 = parse_real(v, key, line);
  else if (key == "theta0_deg") theta0_deg = parse_real(v, key, line);
  else if (key == "r_i") r_i = parse_real(v, key, line);
  else if (key == "M_i") M_i = parse_real(v, key, line);
  else if (key == "dM_i") dM_i = parse_real(v, key, line);
  else if (key == "r_min") r_min = parse_real(v, key, line);
  else if (key == "r_max") r_max = parse_real(v, key, line);
  else if (key == "ordering") {
    if (v != "zhu-kroemer" && v != "mustafa-mazharimousavi")
      throw config_error("unknown ordering '" + v + "'", line);
    ordering = v;
  } else if (key == "sigma_r_eigenvalue") {
    const auto s = parse_int(v, key, line);
    if (s != 1 && s != -1) throw config_error("sigma_r_eigenvalue must be +1 or -1", line);
    sigma_r_eigenvalue = static_cast<int>(s);
  } else if (key == "coulomb_convention") {
    if (v != "signed" && v != "absolute")
      throw config_error("coulomb_convention must be 'signed' or 'absolute'", line);
    coulomb_convention = v;
  } else if (key == "rel_tol") rel_tol = parse_real(v, key, line);
  else if (key == "abs_tol") abs_tol = parse_real(v, key, line);
  else if (key == "blowup_threshold") blowup_threshold = parse_real(v, key, line);
  else if (key == "mass_floor") mass_floor = parse_real(v, key, line);
  else if (key == "seed") seed = static_cast<std::uint64_t>(parse_int(v, key, line));
  else throw config_error("unknown key '" + key + "'", line);
  explicitly_set.insert(key);
}

ScenarioConfig ScenarioConfig::parse_string(const std::string& text) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string lineTxt = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (lineTxt.empty()) continue;
    const auto eq = lineTxt.find('=');
    if (eq == std::string::npos)
      throw config_error("expected 'key = value', got '" + lineTxt + "'", lineno);
    const std::string key = trim(lineTxt.substr(0, eq));
    if (key.empty()) throw config_error("missing key", lineno);
    cfg.set(key, lineTxt.substr(eq + 1), lineno);
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

void ScenarioConfig::validate() const {
  try {
    quantum_numbers().validate();
    mapping_params().validate();
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
  if (!(r_min < r_i && r_i < r_max)) throw config_error("require r_min < r_i < r_max");
  if (!(theta0_deg > 0.0 && theta0_deg < 180.0))
    throw config_error("theta0_deg must lie in (0, 180)");
  if (!(rel_tol > 0.0 && abs_tol > 0.0)) throw config_error("tolerances must be positive");
  if (M_i <= 0.0) throw config_error("M_i must be positive");
  if (mass_floor > 0.0 && M_i <= mass_floor)
    throw config_error("M_i must exceed the mass floor");
}

QuantumNumbers ScenarioConfig::quantum_numbers() const {
  QuantumNumbers q;
  q.mu = mu;
  q.j = j;
  q.m = m;
  q.N = N;
  q.n = n;
  q.alpha_fs = alpha_fs;
  q.m0 = m0;
  return q;
}

MappingParams ScenarioConfig::mapping_params() const {
  MappingParams p;
  p.q = quantum_numbers();
  p.theta0 = theta0_deg * M_PI / 180.0;
  p.ordering = ordering == "zhu-kroemer" ? OrderingParams::zhu_kroemer()
                                         : OrderingParams::mustafa_mazharimousavi();
  p.sigma_r_eigenvalue = sigma_r_eigenvalue;
  p.coulomb = coulomb_convention == "signed" ? CoulombConvention::SignedCharge
                                             : CoulombConvention::AbsoluteCharge;
  return p;
}

IntegratorOptions ScenarioConfig::integrator_options() const {
  IntegratorOptions o;
  o.rel_tol = rel_tol;
  o.abs_tol = abs_tol;
  o.blowup_threshold = blowup_threshold;
  o.mass_floor = mass_floor;
  return o;
}

nlohmann::json ScenarioConfig::to_json() const {
  return nlohmann::json{{"mu", mu.str()},
                        {"j", j.str()},
                        {"m", m.str()},
                        {"N", N},
                        {"n", n},
                        {"alpha_fs", alpha_fs},
                        {"m0", m0},
                        {"theta0_deg", theta0_deg},
                        {"r_i", r_i},
                        {"M_i", M_i},
                        {"dM_i", dM_i},
                        {"r_min", r_min},
                        {"r_max", r_max},
                        {"ordering", ordering},
                        {"sigma_r_eigenvalue", sigma_r_eigenvalue},
                        {"coulomb_convention", coulomb_convention},
                        {"rel_tol", rel_tol},
                        {"abs_tol", abs_tol},
                        {"blowup_threshold", blowup_threshold},
                        {"mass_floor", mass_floor},
                        {"seed", seed}};
}

}  // namespace dyonmap
