// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0
//
// Scenario-driven experiment runner. Exit codes: 0 success, 1 verification
// failure, 2 configuration error, 3 solver failure in a required scenario.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyonmap.h"

namespace {

struct ConfigDeleter {
  void operator()(dm_config* c) const { dm_config_free(c); }
};
struct ResultDeleter {
  void operator()(dm_result* r) const { dm_result_free(r); }
};
using ConfigPtr = std::unique_ptr<dm_config, ConfigDeleter>;
using ResultPtr = std::unique_ptr<dm_result, ResultDeleter>;

int status_to_exit(dm_status st) {
  switch (st) {
    case DM_OK: return 0;
    case DM_ERR_CONFIG: return 2;
    case DM_ERR_INVALID_ARG: return 2;
    case DM_ERR_IO: return 3;
    default: return 3;
  }
}

struct GlobalArgs {
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> sets;
  std::int64_t seed = -1;
  bool seed_given = false;
};

ConfigPtr load_config(const GlobalArgs& g, int* exit_code) {
  ConfigPtr cfg(g.config_path.empty() ? dm_config_create()
                                      : dm_config_parse_file(g.config_path.c_str()));
  if (!cfg) {
    std::cerr << "error: " << dm_last_error() << '\n';
    *exit_code = 2;
    return nullptr;
  }
  for (const auto& kv : g.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
      *exit_code = 2;
      return nullptr;
    }
    if (dm_config_set(cfg.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()) !=
        DM_OK) {
      std::cerr << "error: " << dm_last_error() << '\n';
      *exit_code = 2;
      return nullptr;
    }
  }
  if (g.seed_given &&
      dm_config_set(cfg.get(), "seed", std::to_string(g.seed).c_str()) != DM_OK) {
    std::cerr << "error: " << dm_last_error() << '\n';
    *exit_code = 2;
    return nullptr;
  }
  return cfg;
}

std::string resolve_out_dir(const GlobalArgs& g) {
  if (!g.out_dir.empty()) return g.out_dir;
  if (const char* env = std::getenv("PDM_DYON_OUT"); env && *env) return env;
  return "out";
}

int finish(dm_status st, const ResultPtr& res, bool print_table = false) {
  if (st != DM_OK) {
    std::cerr << "error: " << dm_last_error() << '\n';
    return status_to_exit(st);
  }
  if (print_table) std::cout << dm_result_table(res.get());
  std::cout << dm_result_summary_json(res.get()) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyonmap: charge-dyon to position-dependent-mass mapping runner"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs g;
  app.add_option("--config", g.config_path, "scenario config file (key = value lines)");
  app.add_option("--out", g.out_dir,
                 "output directory (default: $PDM_DYON_OUT or ./out)");
  app.add_option("--set", g.sets, "override one config key, e.g. --set m=13/2")
      ->take_all();
  auto* seed_opt = app.add_option("--seed", g.seed, "sampling seed");

  auto* solve = app.add_subcommand("solve", "solve both spin branches");
  auto* potential =
      app.add_subcommand("potential", "solve and tabulate the effective potential");
  auto* sweep = app.add_subcommand("sweep-N", "solve across radial quantum numbers");
  std::vector<int> N_list{0, 1, 2, 3};
  sweep->add_option("--N", N_list, "radial quantum numbers to sweep");
  auto* compare = app.add_subcommand("compare-n", "overlay solves for several charges");
  std::vector<std::int64_t> n_list{0, -1800};
  compare->add_option("--n", n_list, "dyon charge multiples to compare");
  auto* verify = app.add_subcommand("verify", "run the diagnostic battery");
  auto* feas = app.add_subcommand("feasibility", "scan the dyon charge downward");
  std::int64_t n_from = -1800, n_to = -3600, n_step = -200;
  feas->add_option("--from", n_from, "first (largest) n");
  feas->add_option("--to", n_to, "last (smallest) n");
  feas->add_option("--step", n_step, "scan step (negative)");

  CLI11_PARSE(app, argc, argv);
  g.seed_given = seed_opt->count() > 0;

  int exit_code = 0;
  ConfigPtr cfg = load_config(g, &exit_code);
  if (!cfg) return exit_code;
  const std::string out_dir = resolve_out_dir(g);

  dm_result* raw = nullptr;
  if (solve->parsed()) {
    const dm_status st = dm_run_solve(cfg.get(), out_dir.c_str(), &raw);
    return finish(st, ResultPtr(raw));
  }
  if (potential->parsed()) {
    const dm_status st = dm_run_potential(cfg.get(), out_dir.c_str(), &raw);
    return finish(st, ResultPtr(raw));
  }
  if (sweep->parsed()) {
    // The spectrum-sweep scenario defaults to n = -2800 unless set explicitly.
    if (!sweep->count("--N")) N_list = {0, 1, 2, 3};
    bool n_was_set = false;
    for (const auto& kv : g.sets)
      if (kv.rfind("n=", 0) == 0) n_was_set = true;
    if (!g.config_path.empty()) n_was_set = true;  // file may have set it; trust it
    if (!n_was_set) dm_config_set(cfg.get(), "n", "-2800");
    const dm_status st =
        dm_run_sweep_N(cfg.get(), N_list.data(), N_list.size(), out_dir.c_str(), &raw);
    return finish(st, ResultPtr(raw));
  }
  if (compare->parsed()) {
    const dm_status st = dm_run_compare_n(cfg.get(), n_list.data(), n_list.size(),
                                          out_dir.c_str(), &raw);
    return finish(st, ResultPtr(raw));
  }
  if (verify->parsed()) {
    const dm_status st = dm_run_verify(cfg.get(), out_dir.c_str(), &raw);
    ResultPtr res(raw);
    if (st != DM_OK) {
      std::cerr << "error: " << dm_last_error() << '\n';
      return status_to_exit(st);
    }
    std::cout << dm_result_table(res.get());
    std::cout << dm_result_summary_json(res.get()) << '\n';
    return dm_result_passed(res.get()) ? 0 : 1;
  }
  if (feas->parsed()) {
    const dm_status st = dm_run_feasibility(cfg.get(), n_from, n_to, n_step,
                                            out_dir.c_str(), &raw);
    return finish(st, ResultPtr(raw));
  }
  return 2;
}
