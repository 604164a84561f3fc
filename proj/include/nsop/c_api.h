/* Copyright 2026 The nsop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libnsop.
 *
 * Objects are opaque handles created by nsop_*_create/load/run functions and
 * released with the matching nsop_*_free. Every fallible call returns an
 * nsop_status; on failure nsop_last_error() describes the problem (the
 * message is per thread and valid until the next failing call on that
 * thread). Output pointers are only written on NSOP_OK.
 */

#ifndef NSOP_C_API_H_
#define NSOP_C_API_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NSOP_API __declspec(dllexport)
#else
#define NSOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nsop_status {
  NSOP_OK = 0,
  NSOP_ERR_INVALID_ARGUMENT = 1,
  NSOP_ERR_PARSE = 2,
  NSOP_ERR_IO = 3,
  NSOP_ERR_CONTRACT = 4,
  NSOP_ERR_INTERNAL = 5
} nsop_status;

typedef enum nsop_solve_status {
  NSOP_SOLVE_OPTIMAL = 0,
  NSOP_SOLVE_INFEASIBLE = 1,
  NSOP_SOLVE_FEASIBLE_TIME_LIMIT = 2,
  NSOP_SOLVE_UNKNOWN_TIME_LIMIT = 3
} nsop_solve_status;

typedef enum nsop_report_format {
  NSOP_FORMAT_TABLE = 0,
  NSOP_FORMAT_CSV = 1,
  NSOP_FORMAT_JSON = 2
} nsop_report_format;

typedef struct nsop_instance nsop_instance;
typedef struct nsop_catalog nsop_catalog;
typedef struct nsop_search_result nsop_search_result;
typedef struct nsop_report nsop_report;

typedef struct nsop_search_params {
  int32_t k_init;
  int32_t delta;
  int32_t l_limit;
  /* Per-NSOP budget in seconds; <= 0 selects 15 s (m <= 500) or 45 s. */
  double nsop_time_limit_s;
  /* Per-NSOP node budget; <= 0 means none. */
  int64_t node_limit;
  /* Non-zero: with a node budget, ignore the wall clock. */
  int32_t deterministic;
  /* Non-zero: per-iteration progress on stderr. */
  int32_t verbose;
} nsop_search_params;

typedef struct nsop_iteration {
  int32_t t;
  int32_t k;
  nsop_solve_status status;
  int64_t incumbent_cost_after;
  int32_t improved;
  double elapsed_s;
  int64_t nodes;
} nsop_iteration;

NSOP_API const char* nsop_last_error(void);
NSOP_API const char* nsop_version(void);

/* k_init = delta = l_limit = 5, automatic time limit, no node budget. */
NSOP_API void nsop_search_params_default(nsop_search_params* params);

/* Instances. `name` may be NULL (file stem / "instance"). */
NSOP_API nsop_status nsop_instance_load_file(const char* path,
                                             const char* name,
                                             nsop_instance** out);
NSOP_API nsop_status nsop_instance_parse(const char* text, size_t length,
                                         const char* name,
                                         nsop_instance** out);
NSOP_API void nsop_instance_free(nsop_instance* instance);
NSOP_API const char* nsop_instance_name(const nsop_instance* instance);
NSOP_API int32_t nsop_instance_num_rows(const nsop_instance* instance);
NSOP_API int32_t nsop_instance_num_cols(const nsop_instance* instance);
/* Percentage of non-zero matrix entries. */
NSOP_API double nsop_instance_density(const nsop_instance* instance);

/* Search. */
NSOP_API nsop_status nsop_search_run(const nsop_instance* instance,
                                     const nsop_search_params* params,
                                     nsop_search_result** out);
NSOP_API void nsop_search_result_free(nsop_search_result* result);
NSOP_API int64_t nsop_search_result_initial_cost(const nsop_search_result* r);
NSOP_API int64_t nsop_search_result_cost(const nsop_search_result* r);
NSOP_API int32_t nsop_search_result_final_k(const nsop_search_result* r);
NSOP_API double nsop_search_result_total_time(const nsop_search_result* r);
NSOP_API int32_t nsop_search_result_guarantee(const nsop_search_result* r);
NSOP_API size_t nsop_search_result_num_iterations(const nsop_search_result* r);
NSOP_API nsop_status nsop_search_result_iteration(const nsop_search_result* r,
                                                  size_t index,
                                                  nsop_iteration* out);
/* Number of selected columns; copies up to `capacity` 0-based indices. */
NSOP_API size_t nsop_search_result_columns(const nsop_search_result* r,
                                           int32_t* columns,
                                           size_t capacity);
NSOP_API const char* nsop_solve_status_name(nsop_solve_status status);

/* Best-known catalogs. */
NSOP_API nsop_status nsop_catalog_load_file(const char* path,
                                            nsop_catalog** out);
/* The catalog compiled into the library. */
NSOP_API nsop_status nsop_catalog_bundled(nsop_catalog** out);
NSOP_API void nsop_catalog_free(nsop_catalog* catalog);
NSOP_API size_t nsop_catalog_size(const nsop_catalog* catalog);
/* Returns 0 if the name is unknown. */
NSOP_API int64_t nsop_catalog_lookup(const nsop_catalog* catalog,
                                     const char* name);

/* Benchmark suite. `catalog` NULL uses the bundled one; `selection` NULL or
 * "" selects everything; `parallel` < 1 is treated as 1. */
NSOP_API nsop_status nsop_bench_run(const char* instance_dir,
                                    const nsop_catalog* catalog,
                                    const nsop_search_params* params,
                                    const char* selection, int32_t parallel,
                                    nsop_report** out);
NSOP_API void nsop_report_free(nsop_report* report);
NSOP_API size_t nsop_report_num_rows(const nsop_report* report);
NSOP_API size_t nsop_report_num_errors(const nsop_report* report);
NSOP_API double nsop_report_average_deviation(const nsop_report* report);
NSOP_API double nsop_report_average_time(const nsop_report* report);
/* Writes to `path`, or standard output when `path` is NULL. */
NSOP_API nsop_status nsop_report_emit(const nsop_report* report,
                                      nsop_report_format format,
                                      const char* path);

#ifdef __cplusplus
}
#endif

#endif /* NSOP_C_API_H_ */
