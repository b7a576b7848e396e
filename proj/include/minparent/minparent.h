/* Copyright 2026 The minparent Authors
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

/* C interface to libminparent.
 *
 * Every fallible call returns an mp_status; on failure a message is
 * available from mp_last_error() on the calling thread. Handles are opaque and
 * owned by the caller, who releases them with the matching *_free function.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with mp_string_free(). Text arguments are NUL-terminated UTF-8
 * in the file formats described in README.md.
 */

#ifndef MINPARENT_MINPARENT_H_
#define MINPARENT_MINPARENT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MINPARENT_BUILDING_LIBRARY)
#define MP_API __attribute__((visibility("default")))
#else
#define MP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_INVALID_ARGUMENT = 1,
  MP_ERR_PARSE = 2,
  MP_ERR_IO = 3,
  MP_ERR_INFEASIBLE = 4,
  MP_ERR_BUDGET_EXCEEDED = 5,
  MP_ERR_INTERNAL = 6
} mp_status;

typedef enum mp_solve_status {
  MP_SOLVE_OPTIMAL = 0,
  MP_SOLVE_FEASIBLE = 1,
  MP_SOLVE_INFEASIBLE = 2
} mp_solve_status;

typedef struct mp_population mp_population;
typedef struct mp_solution mp_solution;
typedef struct mp_fmp_instance mp_fmp_instance;
typedef struct mp_selection mp_selection;

typedef struct mp_sim_config {
  size_t families;
  size_t children_min;
  size_t children_max;
  size_t loci;
  size_t alleles_per_locus;
  uint64_t seed;
} mp_sim_config;

/* Message for the last failed call on this thread ("" if none). */
MP_API const char* mp_last_error(void);
MP_API const char* mp_status_name(mp_status status);
MP_API void mp_string_free(char* text);

/* Populations. */
MP_API mp_status mp_population_parse(const char* text, mp_population** out);
MP_API mp_status mp_population_load(const char* path, mp_population** out);
MP_API void mp_population_free(mp_population* population);
MP_API size_t mp_population_size(const mp_population* population);
MP_API size_t mp_population_num_loci(const mp_population* population);
MP_API mp_status mp_population_index_of(const mp_population* population,
                                        const char* id, size_t* out_index);
MP_API mp_status mp_population_serialize(const mp_population* population,
                                         char** out_text);

/* Sibling-set oracle. *out_result is 1 for a sibling set, 0 otherwise. */
MP_API mp_status mp_is_sibling_set(const mp_population* population,
                                   const size_t* members, size_t count,
                                   int* out_result);
/* Two parents of a sibling set, as population text. */
MP_API mp_status mp_materialize_parents(const mp_population* population,
                                        const size_t* members, size_t count,
                                        char** out_text);

/* MIN-PARENT. budget_ms <= 0 means no deadline. */
MP_API mp_status mp_solve_greedy(const mp_population* population, size_t c,
                                 mp_solution** out);
MP_API mp_status mp_solve_exact(const mp_population* population,
                                size_t max_slots, int64_t budget_ms,
                                mp_solution** out);
MP_API void mp_solution_free(mp_solution* solution);
MP_API mp_solve_status mp_solution_status(const mp_solution* solution);
MP_API size_t mp_solution_parent_count(const mp_solution* solution);
MP_API size_t mp_solution_group_count(const mp_solution* solution);
MP_API size_t mp_solution_max_group_size(const mp_solution* solution);
MP_API uint64_t mp_solution_oracle_calls(const mp_solution* solution);
MP_API int64_t mp_solution_wall_ms(const mp_solution* solution);
MP_API mp_status mp_solution_report(const mp_solution* solution,
                                    char** out_text);

/* FIND-MIN-PARENT instances: universe and pool in population format, the
 * partition as one line of member ids per cell. */
MP_API mp_status mp_fmp_parse(const char* universe_text, const char* pool_text,
                              const char* partition_text,
                              mp_fmp_instance** out);
MP_API void mp_fmp_free(mp_fmp_instance* instance);
MP_API size_t mp_fmp_universe_size(const mp_fmp_instance* instance);
MP_API size_t mp_fmp_pool_size(const mp_fmp_instance* instance);
MP_API size_t mp_fmp_cell_count(const mp_fmp_instance* instance);
MP_API size_t mp_fmp_num_loci(const mp_fmp_instance* instance);
MP_API mp_status mp_fmp_serialize(const mp_fmp_instance* instance,
                                  char** out_universe, char** out_pool,
                                  char** out_partition);
MP_API mp_status mp_find_parents_exact(const mp_fmp_instance* instance,
                                       int64_t budget_ms, mp_selection** out);
MP_API mp_status mp_find_parents_greedy(const mp_fmp_instance* instance,
                                        mp_selection** out);
MP_API void mp_selection_free(mp_selection* selection);
MP_API mp_solve_status mp_selection_status(const mp_selection* selection);
MP_API size_t mp_selection_size(const mp_selection* selection);
MP_API int64_t mp_selection_wall_ms(const mp_selection* selection);
MP_API mp_status mp_selection_report(const mp_selection* selection,
                                     char** out_text);

/* Reductions and exhaustive source-problem solvers. The brute-force reports
 * are "t <count>" followed by "triangle u v w" lines, and "gamma <count>"
 * followed by "witness <vertices>" with vertices written a<i> / b<j>. */
MP_API mp_status mp_reduce_tp(const char* graph_text, mp_population** out);
MP_API mp_status mp_reduce_minrep(const char* minrep_text, int faithful,
                                  mp_fmp_instance** out);
MP_API mp_status mp_solve_tp_brute(const char* graph_text, size_t* out_t,
                                   char** out_text);
MP_API mp_status mp_solve_minrep_brute(const char* minrep_text,
                                       size_t* out_gamma, char** out_text);

/* Simulation. out_truth may be NULL. */
MP_API mp_status mp_gen_random(const mp_sim_config* config,
                               mp_population** out_population,
                               char** out_truth);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* MINPARENT_MINPARENT_H_ */
