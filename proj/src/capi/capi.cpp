// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#include "dyonmap.h"

#include <cstring>
#include <filesystem>
#include <memory>
#include <string>

#include "core/errors.hpp"
#include "core/runner.hpp"
#include "core/scenario.hpp"

namespace {

thread_local std::string g_last_error = "";

void set_error(const std::string& msg) { g_last_error = msg; }

}  // namespace

struct dm_config {
  dyonmap::ScenarioConfig cfg;
  std::string json_cache;
};

struct dm_result {
  nlohmann::json summary;
  std::string summary_cache;
  std::string table;
  bool passed = false;
  // Present for solve/potential runs only.
  std::unique_ptr<dyonmap::SolveOutcome> solve;
};

namespace {

template <typename Fn>
dm_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const dyonmap::config_error& e) {
    set_error(e.what());
    return DM_ERR_CONFIG;
  } catch (const std::filesystem::filesystem_error& e) {
    set_error(e.what());
    return DM_ERR_IO;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return DM_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return DM_ERR_INVALID_ARG;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return DM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return DM_ERR_SOLVER;
  }
}

dm_result* make_result(nlohmann::json summary, bool passed, std::string table = "",
                       std::unique_ptr<dyonmap::SolveOutcome> solve = nullptr) {
  auto* res = new dm_result;
  res->summary = std::move(summary);
  res->summary_cache = res->summary.dump(2);
  res->table = std::move(table);
  res->passed = passed;
  res->solve = std::move(solve);
  return res;
}

std::string dir_of(const char* out_dir) { return out_dir ? std::string(out_dir) : ""; }

}  // namespace

extern "C" {

const char* dm_version(void) { return "1.0.0"; }

const char* dm_last_error(void) { return g_last_error.c_str(); }

dm_config* dm_config_create(void) {
  auto* c = new (std::nothrow) dm_config;
  if (!c) set_error("out of memory");
  return c;
}

dm_config* dm_config_parse_file(const char* path) {
  if (!path) {
    set_error("null path");
    return nullptr;
  }
  dm_config* out = nullptr;
  guarded([&]() -> dm_status {
    auto cfg = dyonmap::ScenarioConfig::parse_file(path);
    out = new dm_config{std::move(cfg), ""};
    return DM_OK;
  });
  return out;
}

dm_config* dm_config_parse_string(const char* text) {
  if (!text) {
    set_error("null text");
    return nullptr;
  }
  dm_config* out = nullptr;
  guarded([&]() -> dm_status {
    auto cfg = dyonmap::ScenarioConfig::parse_string(text);
    out = new dm_config{std::move(cfg), ""};
    return DM_OK;
  });
  return out;
}

dm_status dm_config_set(dm_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) {
    set_error("null argument");
    return DM_ERR_INVALID_ARG;
  }
  return guarded([&]() -> dm_status {
    cfg->cfg.set(key, value);
    return DM_OK;
  });
}

const char* dm_config_json(dm_config* cfg) {
  if (!cfg) {
    set_error("null config");
    return nullptr;
  }
  cfg->json_cache = cfg->cfg.to_json().dump(2);
  return cfg->json_cache.c_str();
}

void dm_config_free(dm_config* cfg) { delete cfg; }

dm_status dm_run_solve(const dm_config* cfg, const char* out_dir, dm_result** out) {
  if (!cfg || !out) {
    set_error("null argument");
    return DM_ERR_INVALID_ARG;
  }
  return guarded([&]() -> dm_status {
    auto oc = std::make_unique<dyonmap::SolveOutcome>(
        dyonmap::run_solve(cfg->cfg, dir_of(out_dir)));
    auto summary = oc->summary;
    *out = make_result(std::move(summary), true, "", std::move(oc));
    return DM_OK;
  });
}

dm_status dm_run_potential(const dm_config* cfg, const char* out_dir, dm_result** out) {
  if (!cfg || !out) {
    set_error("null argument");
    return DM_ERR_INVALID_ARG;
  }
  return guarded([&]() -> dm_status {
    auto oc = std::make_unique<dyonmap::SolveOutcome>(
        dyonmap::run_potential(cfg->cfg, dir_of(out_dir)));
    auto summary = oc->summary;
    *out = make_result(std::move(summary), true, "", std::move(oc));
    return DM_OK;
  });
}

dm_status dm_run_sweep_N(const dm_config* cfg, const int* N_list, size_t count,
                         const char* out_dir, dm_result** out) {
  if (!cfg || !out || (!N_list && count > 0)) {
    set_error("null argument");
    return DM_ERR_INVALID_ARG;
  }
  return guarded([&]() -> dm_status {
    const std::vector<int> Ns(N_list, N_list + count);
    auto oc = dyonmap::run_spectrum_sweep(cfg->cfg, Ns, dir_of(out_dir));
    *out = make_result(std::move(oc.summary), true);
    return DM_OK;
  });
}

dm_status dm_run_compare_n(const dm_config* cfg, const int64_t* n_list, size_t count,
                           const char* out_dir, dm_result** out) {
  if (!cfg || !out || (!n_list && count > 0)) {
    set_error("null argument");
    return DM_ERR_INVALID_ARG;
  }
  return guarded([&]() -> dm_status {
    const std::vector<std::int64_t> ns(n_list, n_list + count);
    auto oc = dyonmap::run_compare_n(cfg->cfg, ns, dir_of(out_dir));
    *out = make_result(std::move(oc.summary), true);
    return DM_OK;
  });
}

dm_status dm_run_feasibility(const dm_config* cfg, int64_t n_from, int64_t n_to,
                             int64_t n_step, const char* out_dir, dm_result** out) {
  if (!cfg || !out) {
    set_error("null argument");
    return DM_ERR_INVALID_ARG;
  }
  return guarded([&]() -> dm_status {
    auto oc = dyonmap::run_feasibility(cfg->cfg, n_from, n_to, n_step, dir_of(out_dir));
    *out = make_result(std::move(oc.summary), true);
    return DM_OK;
  });
}

dm_status dm_run_verify(const dm_config* cfg, const char* out_dir, dm_result** out) {
  if (!cfg || !out) {
    set_error("null argument");
    return DM_ERR_INVALID_ARG;
  }
  return guarded([&]() -> dm_status {
    std::string table;
    auto oc = dyonmap::run_verify(cfg->cfg, dir_of(out_dir), &table);
    *out = make_result(std::move(oc.summary), oc.all_passed, std::move(table));
    return DM_OK;
  });
}

const char* dm_result_summary_json(const dm_result* res) {
  if (!res) {
    set_error("null result");
    return nullptr;
  }
  return res->summary_cache.c_str();
}

const char* dm_result_table(const dm_result* res) {
  if (!res) {
    set_error("null result");
    return nullptr;
  }
  return res->table.c_str();
}

int dm_result_passed(const dm_result* res) { return res && res->passed ? 1 : 0; }

dm_status dm_result_profile_eval(const dm_result* res, int branch, double r, double* M,
                                 double* dM, double* d2M) {
  if (!res || (branch != DM_BRANCH_UP && branch != DM_BRANCH_DOWN)) {
    set_error("null result or bad branch");
    return DM_ERR_INVALID_ARG;
  }
  if (!res->solve) {
    set_error("result carries no profiles (not a solve run)");
    return DM_ERR_INVALID_ARG;
  }
  return guarded([&]() -> dm_status {
    const auto& br = branch == DM_BRANCH_UP ? res->solve->up : res->solve->down;
    if (!br.covers(r)) {
      set_error("r outside the covered span");
      return DM_ERR_DOMAIN;
    }
    const auto st = br.eval(r);
    if (M) *M = st.M;
    if (dM) *dM = st.dM;
    if (d2M) *d2M = st.d2M;
    return DM_OK;
  });
}

void dm_result_free(dm_result* res) { delete res; }

}  // extern "C"
