/* Copyright (c) 2026 dyonmap developers
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API for the dyonmap library: mapping a bound charge-dyon state onto a
 * position-dependent-effective-mass background.
 *
 * All functions return a dm_status; every non-status output goes through
 * pointer arguments. Handles are opaque and must be released with the
 * matching *_free function. On failure, dm_last_error() returns a
 * human-readable message for the calling thread.
 */

#ifndef DYONMAP_H
#define DYONMAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DM_API __declspec(dllexport)
#else
#define DM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int dm_status;

enum {
  DM_OK = 0,
  DM_ERR_INVALID_ARG = 1, /* null handle, bad enum value, ... */
  DM_ERR_CONFIG = 2,      /* config parse/validation error */
  DM_ERR_SOLVER = 3,      /* solver failure in a required scenario */
  DM_ERR_IO = 4,          /* file system error */
  DM_ERR_DOMAIN = 5,      /* evaluation outside a function's domain */
  DM_ERR_INTERNAL = 6
};

enum { DM_BRANCH_UP = 0, DM_BRANCH_DOWN = 1 };

/* Library version, e.g. "1.0.0". */
DM_API const char* dm_version(void);

/* Message for the last failure on this thread; never NULL. */
DM_API const char* dm_last_error(void);

/* ---- scenario configuration -------------------------------------------- */

typedef struct dm_config dm_config;

/* Default configuration (the headline bound-state scenario). */
DM_API dm_config* dm_config_create(void);

/* Parses line-oriented `key = value` text with '#' comments; half-integer
 * keys take exact fractions ("m = 13/2"). Returns NULL on error. */
DM_API dm_config* dm_config_parse_file(const char* path);
DM_API dm_config* dm_config_parse_string(const char* text);

/* Applies one key=value override. */
DM_API dm_status dm_config_set(dm_config* cfg, const char* key, const char* value);

/* Resolved configuration (defaults materialized) as a JSON document. The
 * returned string lives until the next call on the same config or free. */
DM_API const char* dm_config_json(dm_config* cfg);

DM_API void dm_config_free(dm_config* cfg);

/* ---- runs ---------------------------------------------------------------- */

typedef struct dm_result dm_result;

/* Solves both spin branches; writes solve.csv / solve.gp / summary.json to
 * out_dir when out_dir is non-NULL and nonempty. */
DM_API dm_status dm_run_solve(const dm_config* cfg, const char* out_dir, dm_result** out);

/* Solve plus a 500-point effective-potential table (potential.csv). */
DM_API dm_status dm_run_potential(const dm_config* cfg, const char* out_dir,
                                  dm_result** out);

/* One solve per radial quantum number in N_list; per-N CSVs plus a combined
 * file. Per-N failures are recorded in the summary, not fatal. */
DM_API dm_status dm_run_sweep_N(const dm_config* cfg, const int* N_list, size_t count,
                                const char* out_dir, dm_result** out);

/* Overlaid solves for each dyon charge multiple in n_list. */
DM_API dm_status dm_run_compare_n(const dm_config* cfg, const int64_t* n_list,
                                  size_t count, const char* out_dir, dm_result** out);

/* Downward feasibility scan n_from -> n_to (n_step < 0); records which
 * charges complete the integration window. */
DM_API dm_status dm_run_feasibility(const dm_config* cfg, int64_t n_from, int64_t n_to,
                                    int64_t n_step, const char* out_dir, dm_result** out);

/* Full diagnostic battery; dm_result_passed() reports the aggregate. */
DM_API dm_status dm_run_verify(const dm_config* cfg, const char* out_dir, dm_result** out);

/* ---- results ------------------------------------------------------------- */

/* Machine-readable summary (JSON). Owned by the result handle. */
DM_API const char* dm_result_summary_json(const dm_result* res);

/* Human-readable table for verify runs; empty string otherwise. */
DM_API const char* dm_result_table(const dm_result* res);

/* 1 when every acceptance-grade check in a verify run passed (or when a
 * solve-style run completed), else 0. */
DM_API int dm_result_passed(const dm_result* res);

/* Dense evaluation of a solved branch profile at radius r (solve/potential
 * results only). Outputs may be NULL. DM_ERR_DOMAIN outside the span. */
DM_API dm_status dm_result_profile_eval(const dm_result* res, int branch, double r,
                                        double* M, double* dM, double* d2M);

DM_API void dm_result_free(dm_result* res);

#ifdef __cplusplus
}
#endif

#endif /* DYONMAP_H */
