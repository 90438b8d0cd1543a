// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "core/runner.hpp"
#include "doctest.h"

using namespace dyonmap;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dyonmap_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("config: defaults are the headline scenario") {
  ScenarioConfig cfg;
  CHECK(cfg.mu.value() == 7.0);
  CHECK(cfg.m.twice() == 13);
  CHECK(cfg.n == -1800);
  CHECK(cfg.N == 0);
  CHECK(cfg.theta0_deg == 30.0);
  CHECK(cfg.r_i == 0.20);
  CHECK(cfg.M_i == 1.0);
  CHECK(cfg.r_max == 0.50);
  CHECK(cfg.ordering == "zhu-kroemer");
  CHECK(cfg.sigma_r_eigenvalue == 1);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config: parses fractions exactly and tracks provenance") {
  const auto cfg = ScenarioConfig::parse_string(
      "# comment line\n"
      "mu = 7\n"
      "m = 13/2   # trailing comment\n"
      "j = 13/2\n"
      "n = -2800\n"
      "alpha_fs = 1/137\n"
      "\n"
      "rel_tol = 1e-9\n");
  CHECK(cfg.m.twice() == 13);
  CHECK(cfg.alpha_fs == doctest::Approx(1.0 / 137.0).epsilon(1e-16));
  CHECK(cfg.n == -2800);
  CHECK(cfg.rel_tol == 1e-9);
  CHECK(cfg.was_set("m"));
  CHECK(cfg.was_set("n"));
  CHECK_FALSE(cfg.was_set("theta0_deg"));
}

TEST_CASE("config: line-precise errors") {
  try {
    ScenarioConfig::parse_string("mu = 7\nbogus_key = 3\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
  }
  try {
    ScenarioConfig::parse_string("mu = 7\n\nm 13/2\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(e.line() == 3);
  }
  try {
    ScenarioConfig::parse_string("N = 1.5\n");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(ScenarioConfig::parse_string("m = 3/4\n"), config_error);
  CHECK_THROWS_AS(ScenarioConfig::parse_string("ordering = weird\n"), config_error);
  CHECK_THROWS_AS(ScenarioConfig::parse_string("sigma_r_eigenvalue = 2\n"), config_error);
}

TEST_CASE("config: validation catches inconsistent windows and quantum numbers") {
  ScenarioConfig cfg;
  cfg.r_i = 0.7;
  CHECK_THROWS_AS(cfg.validate(), config_error);
  cfg = ScenarioConfig{};
  cfg.j = HalfInt(7);
  CHECK_THROWS_AS(cfg.validate(), config_error);
  cfg = ScenarioConfig{};
  cfg.M_i = 1e-9;  // below the default floor
  CHECK_THROWS_AS(cfg.validate(), config_error);
}

TEST_CASE("config: json echo materializes every default") {
  const ScenarioConfig cfg;
  const auto j = cfg.to_json();
  for (const char* key :
       {"mu", "j", "m", "N", "n", "alpha_fs", "m0", "theta0_deg", "r_i", "M_i", "dM_i",
        "r_min", "r_max", "ordering", "sigma_r_eigenvalue", "coulomb_convention",
        "rel_tol", "abs_tol", "blowup_threshold", "mass_floor", "seed"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["m"] == "13/2");
}

TEST_CASE("run_solve: writes csv, plot script and summary") {
  TempDir tmp;
  ScenarioConfig cfg;
  const auto oc = run_solve(cfg, tmp.path.string());
  CHECK(fs::exists(tmp.path / "solve.csv"));
  CHECK(fs::exists(tmp.path / "solve.gp"));
  CHECK(fs::exists(tmp.path / "summary.json"));

  const auto csv = slurp(tmp.path / "solve.csv");
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "r,M_up,dM_up,M_down,dM_down,U_eff_up,U_eff_down,residual_up,residual_down");
  // 501 grid rows + header
  int rows = 0;
  for (std::string l; std::getline(lines, l);) ++rows;
  CHECK(rows == 501);

  const auto summary = nlohmann::json::parse(slurp(tmp.path / "summary.json"));
  CHECK(summary.contains("config"));
  CHECK(summary["config"]["m"] == "13/2");
  CHECK(summary.contains("up"));
  CHECK(summary.contains("down"));
  CHECK(summary["condition"]["satisfied"] == true);
}

TEST_CASE("run_solve: condition violation is flagged in the summary") {
  ScenarioConfig cfg;
  cfg.mu = HalfInt(1);
  cfg.j = HalfInt::from_twice(1);
  cfg.m = HalfInt::from_twice(1);
  const auto oc = run_solve(cfg, "");
  CHECK_FALSE(oc.condition.satisfied);
  CHECK(oc.summary.contains("warnings"));
  CHECK(oc.summary["condition"]["satisfied"] == false);
}

TEST_CASE("run_solve: full-precision round trip of csv numbers") {
  CHECK(format_g17(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_g17(0.2) == "0.20000000000000001");
  const double v = 123.456789e-7;
  CHECK(std::stod(format_g17(v)) == v);
}

TEST_CASE("run_solve: byte-identical outputs for identical config and seed") {
  TempDir a, b;
  ScenarioConfig cfg;
  cfg.seed = 42;
  run_solve(cfg, a.path.string());
  run_solve(cfg, b.path.string());
  CHECK(slurp(a.path / "solve.csv") == slurp(b.path / "solve.csv"));
  CHECK(slurp(a.path / "summary.json") == slurp(b.path / "summary.json"));
}

TEST_CASE("run_potential: uniform 500-point grid; trivial config gives zero potential") {
  TempDir tmp;
  ScenarioConfig cfg;
  cfg.mu = HalfInt(0);
  cfg.n = 0;
  cfg.M_i = 2.0;
  run_potential(cfg, tmp.path.string());
  const auto csv = slurp(tmp.path / "potential.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  bool all_zero = true;
  while (std::getline(lines, line)) {
    ++rows;
    // column 6 = U_eff_up
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i < 6; ++i) std::getline(cells, cell, ',');
    if (!cell.empty() && std::stod(cell) != 0.0) all_zero = false;
  }
  CHECK(rows == 500);
  CHECK(all_zero);
}

TEST_CASE("run_sweep and run_compare: per-member files and recorded failures") {
  TempDir tmp;
  ScenarioConfig cfg;
  cfg.n = -2800;
  const auto sweep = run_spectrum_sweep(cfg, {0, 1}, tmp.path.string());
  CHECK(sweep.entries.size() == 2);
  CHECK(sweep.entries[0].solved);
  CHECK(fs::exists(tmp.path / "sweep_N0.csv"));
  CHECK(fs::exists(tmp.path / "sweep_N1.csv"));
  CHECK(fs::exists(tmp.path / "sweep_combined.csv"));

  const auto cmp = run_compare_n(cfg, {0, -1800}, tmp.path.string());
  CHECK(cmp.entries.size() == 2);
  CHECK(fs::exists(tmp.path / "compare_n.csv"));
  CHECK(cmp.summary["per_n"].size() == 2);
}

TEST_CASE("run_feasibility: direction validation and csv emission") {
  TempDir tmp;
  ScenarioConfig cfg;
  CHECK_THROWS_AS(run_feasibility(cfg, -3600, -1800, -200, ""), config_error);
  CHECK_THROWS_AS(run_feasibility(cfg, -1800, -3600, 200, ""), config_error);
  const auto oc = run_feasibility(cfg, -1800, -2200, -200, tmp.path.string());
  CHECK(oc.entries.size() == 3);
  const auto csv = slurp(tmp.path / "feasibility.csv");
  CHECK(csv.rfind("n,completed,r_event_up,r_event_down\n", 0) == 0);
}

TEST_CASE("run_solve: alternative ordering solves with small residual") {
  ScenarioConfig cfg;
  cfg.ordering = "mustafa-mazharimousavi";
  const auto oc = run_solve(cfg, "");
  CHECK(oc.up.forward.steps() > 2);
  CHECK(oc.up.residual.max_rel < 1e-6);
  CHECK(oc.down.residual.max_rel < 1e-6);
  // The two orderings give pointwise different effective potentials on the
  // same state.
  const auto st = oc.up.forward.eval(0.22);
  const double u_mm =
      effective_potential(st.M, st.dM, st.d2M, 0.22, OrderingParams::mustafa_mazharimousavi());
  const double u_zk =
      effective_potential(st.M, st.dM, st.d2M, 0.22, OrderingParams::zhu_kroemer());
  CHECK(u_mm != u_zk);
}

TEST_CASE("run_verify: table emitted and diagnostics pass") {
  TempDir tmp;
  ScenarioConfig cfg;
  std::string table;
  const auto oc = run_verify(cfg, tmp.path.string(), &table);
  CHECK(oc.all_passed);
  CHECK(fs::exists(tmp.path / "verify.txt"));
  CHECK(fs::exists(tmp.path / "verify.json"));
  CHECK(table.find("pass") != std::string::npos);
}
