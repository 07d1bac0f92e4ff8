/*
 * Copyright 2026 The foldkappa Authors
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

/* C interface to libfoldkappa. Every fallible call returns an fk_status;
 * on failure fk_last_error() describes the problem for the calling thread.
 * Strings returned through fk_string must be released with
 * fk_string_destroy. */

#ifndef FOLDKAPPA_FOLDKAPPA_H_
#define FOLDKAPPA_FOLDKAPPA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FOLDKAPPA_BUILDING_LIBRARY)
#define FK_API __attribute__((visibility("default")))
#else
#define FK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fk_topology fk_topology;
typedef struct fk_string fk_string;

typedef enum fk_status {
  FK_OK = 0,
  FK_INVALID_ARGUMENT = 1,
  FK_OUT_OF_RANGE = 2,
  FK_RESOURCE_EXHAUSTED = 3,
  FK_IO_ERROR = 4,
  FK_INTERNAL = 5
} fk_status;

typedef enum fk_kind { FK_HYPERCUBE = 0, FK_FOLDED = 1 } fk_kind;

typedef enum fk_verdict {
  FK_VERDICT_PASS = 0,
  FK_VERDICT_FAIL = 1,
  FK_VERDICT_UPPER_BOUND_ONLY = 2,
  FK_VERDICT_OUT_OF_RANGE = 3,
  FK_VERDICT_FINDING = 4
} fk_verdict;

typedef struct fk_budget {
  uint64_t max_nodes;     /* search nodes before giving up */
  uint64_t time_limit_ms; /* 0 disables the wall-clock limit */
  int workers;            /* threads; results do not depend on it */
} fk_budget;

/* Called once per report with one line of JSON (no trailing newline). */
typedef void (*fk_report_sink)(const char* json_line, void* user);

FK_API const char* fk_version(void);
FK_API const char* fk_last_error(void);
FK_API const char* fk_status_name(fk_status status);

FK_API void fk_budget_init(fk_budget* budget);

FK_API const char* fk_string_data(const fk_string* s);
FK_API size_t fk_string_size(const fk_string* s);
FK_API void fk_string_destroy(fk_string* s);

/* Accepts kinds FK_HYPERCUBE (n >= 1) and FK_FOLDED (n >= 2). */
FK_API fk_status fk_topology_create(fk_kind kind, int n, fk_topology** out);
FK_API void fk_topology_destroy(fk_topology* t);
FK_API int fk_topology_dimension(const fk_topology* t);
FK_API fk_kind fk_topology_kind(const fk_topology* t);
FK_API uint64_t fk_topology_vertex_count(const fk_topology* t);
FK_API uint64_t fk_topology_edge_count(const fk_topology* t);
FK_API int fk_topology_degree(const fk_topology* t);

/* format: "edgelist" or "json". */
FK_API fk_status fk_topology_export(const fk_topology* t, const char* format, fk_string** out);

FK_API fk_status fk_distance(const fk_topology* t, uint32_t u, uint32_t v, int* out);
FK_API fk_status fk_is_bipartite(const fk_topology* t, int* out);
/* *out is -1 for a bipartite graph. */
FK_API fk_status fk_odd_girth(const fk_topology* t, int* out);

/* g(n+1) − g(g+1)/2 + 1. */
FK_API fk_status fk_f_value(int n, int g, int64_t* out);

/* mode: "exact", "star" or "formula". budget may be NULL. */
FK_API fk_status fk_theta_report(const fk_topology* t, int g, const char* mode,
                                 const fk_budget* budget, fk_verdict* verdict,
                                 fk_string** json_out);

/* Cuts leaving at least g + 1 components. mode: "exact", "upper" or
 * "formula". max_union 0 selects the default union cap. */
FK_API fk_status fk_ckappa_report(const fk_topology* t, int g, const char* mode,
                                  const fk_budget* budget, int max_union, fk_verdict* verdict,
                                  fk_string** json_out);

/* suite: "lemmas", "theta", "ckappa", "structure" or "all". */
FK_API fk_status fk_verify(const char* suite, int n_first, int n_last, uint64_t seed,
                           const fk_budget* budget, fk_report_sink sink, void* user,
                           uint64_t* fail_count);

/* CSV rows for one fault count; mass_violations may be NULL. */
FK_API fk_status fk_faultsim_csv(const fk_topology* t, uint64_t fault_count, uint64_t trials,
                                 uint64_t seed, int workers, fk_string** csv_out,
                                 uint64_t* mass_violations);

FK_API fk_status fk_threshold_report(const fk_topology* t, int g_max, uint64_t trials,
                                     uint64_t seed, int workers, fk_verdict* verdict,
                                     fk_string** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FOLDKAPPA_FOLDKAPPA_H_ */
