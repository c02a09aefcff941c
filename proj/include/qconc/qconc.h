/* Copyright 2026 The qconc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the qconc shared library: multipartite concurrence for pure
 * states and analytical lower bounds for mixed states.
 *
 * Conventions:
 *  - Functions return qconc_status; on failure qconc_last_error() holds a
 *    thread-local diagnostic message.
 *  - Output strings (char**) are heap-allocated; release them with
 *    qconc_string_free(). States are opaque handles released with
 *    qconc_state_free().
 *  - Partitions are written as 1-based blocks joined by '|', e.g. "1|24|3".
 *  - Weight schemes and reports travel as JSON text (see README for the
 *    schemas).
 */

#ifndef QCONC_QCONC_H_
#define QCONC_QCONC_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QCONC_API __declspec(dllexport)
#else
#define QCONC_API __attribute__((visibility("default")))
#endif

typedef enum qconc_status {
  QCONC_OK = 0,
  QCONC_ERR_DOMAIN = 1,    /* invalid arguments, shapes, partitions, schemes */
  QCONC_ERR_IO = 2,        /* file access or parse failures */
  QCONC_ERR_NUMERICAL = 3, /* numerical consistency failures */
} qconc_status;

typedef struct qconc_state qconc_state;

QCONC_API const char* qconc_version(void);

/* Thread-local message describing the most recent failure in this thread. */
QCONC_API const char* qconc_last_error(void);

QCONC_API void qconc_string_free(char* s);
QCONC_API void qconc_state_free(qconc_state* s);

/* State construction. JSON format:
 *   {"dims":[d1,...,dN], "kind":"pure"|"mixed", "data": ...}
 * with data a length-D vector of [re,im] pairs (pure) or a DxD row-major
 * matrix of [re,im] pairs (mixed). */
QCONC_API qconc_status qconc_state_load(const char* path, qconc_state** out);
QCONC_API qconc_status qconc_state_parse(const char* json_text, qconc_state** out);
QCONC_API qconc_status qconc_state_random_pure(const int32_t* dims, int32_t ndims, uint64_t seed,
                                               qconc_state** out);
QCONC_API qconc_status qconc_state_to_json(const qconc_state* s, char** json_out);

QCONC_API int32_t qconc_state_num_systems(const qconc_state* s);
QCONC_API qconc_status qconc_state_dims(const qconc_state* s, int32_t* dims_out, int32_t cap);
QCONC_API int32_t qconc_state_is_pure(const qconc_state* s);

/* Exact concurrence of a pure state. partition may be NULL (finest grain:
 * the full N-partite value) or a partition string such as "1|2|34". */
QCONC_API qconc_status qconc_concurrence(const qconc_state* s, const char* partition,
                                         double* value, double* squared);

/* Mixed-state lower bounds. method is one of
 *   "theorem1" | "theorem2" | "corollary1" | "delta" | "scheme".
 * providers is a comma list of "ppt", "ccnr", "wootters", or "best" / NULL.
 * tri_method tunes theorem1's tripartite terms: "relation", "theorem2" or
 * "best" / NULL. scheme_json is required for method "scheme", ignored
 * otherwise. The report is JSON:
 *   {"method":..., "value":..., "squared":..., "contributions":{...}} */
QCONC_API qconc_status qconc_bound(const qconc_state* s, const char* method,
                                   const char* providers, const char* tri_method,
                                   const char* scheme_json, char** report_json_out);

/* All M-block partitions of {1..N}, canonical order, one per line. */
QCONC_API qconc_status qconc_enumerate_partitions(int32_t n, int32_t m, char** lines_out);

/* Block unions of a partition, ascending, one subset per line. */
QCONC_API qconc_status qconc_realized_subsets(int32_t n, const char* partition, char** lines_out);

/* Coverage slack of a weight scheme, per nonempty proper subset. Input
 *   {"n":N, "weights":{"1|2|34":[1,6], ...}}
 * (weights as [num,den], integers, numbers, or "num/den" strings). */
QCONC_API qconc_status qconc_verify_scheme(const char* scheme_json, char** report_json_out);

/* Maximal valid weights for a comma-separated partition family under
 * objective "max_uniform" or "max_total"; returns a scheme JSON. */
QCONC_API qconc_status qconc_compose_weights(int32_t n, const char* partitions_csv,
                                             const char* objective, char** scheme_json_out);

/* The built-in one-parameter four-qubit family. */
QCONC_API qconc_status qconc_example_point(double t, const char* providers, char** json_out);
QCONC_API qconc_status qconc_example_sweep(double t_min, double t_max, int32_t steps,
                                           const char* providers, int32_t jobs,
                                           const char* out_path);

/* Runs every invariant suite; report gets one line per suite. Returns
 * QCONC_OK only if all suites pass. */
QCONC_API qconc_status qconc_selftest(uint64_t seed, char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCONC_QCONC_H_ */
