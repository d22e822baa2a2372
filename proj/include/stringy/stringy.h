/*
  Copyright 2026 The stringy-hd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

/*
  C interface to the stringy library.

  Stacks are opaque handles. Every operation returns a stringy_status and, on
  success, a result handle whose payload is a JSON document; all numbers in it
  are exact (integers, or rationals as "p/q" strings). stringy_result_ok tells
  whether every agreement check inside the result passed. On failure the
  message is available from stringy_last_error() on the calling thread.
*/

#ifndef STRINGY_STRINGY_H
#define STRINGY_STRINGY_H

#include <stddef.h>

#if defined(_WIN32)
#define STRINGY_API __declspec(dllexport)
#else
#define STRINGY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stringy_status {
  STRINGY_OK = 0,
  STRINGY_E_INVALID_ARGUMENT = 1,
  STRINGY_E_PARSE = 2,
  STRINGY_E_UNSUPPORTED = 3,
  STRINGY_E_INSUFFICIENT_PRECISION = 4,
  STRINGY_E_NOT_LOG_TERMINAL = 5,
  STRINGY_E_GUARD_EXCEEDED = 6,
  STRINGY_E_NOT_SPECIALIZABLE = 7,
  STRINGY_E_NOT_POLYNOMIAL = 8,
  STRINGY_E_NOT_STABILIZED = 9,
  STRINGY_E_NON_GENERIC = 10,
  STRINGY_E_INTERNAL = 99
} stringy_status;

typedef struct stringy_stack stringy_stack;
typedef struct stringy_result stringy_result;

STRINGY_API const char* stringy_version(void);
STRINGY_API const char* stringy_status_name(stringy_status status);
/* Message of the last failure on this thread; empty after a success. */
STRINGY_API const char* stringy_last_error(void);

/* {"group": {"mu": N} | "Gm", "weights": [...]} */
STRINGY_API stringy_status stringy_stack_from_json(const char* json_text, stringy_stack** out);
STRINGY_API stringy_status stringy_stack_mu(int order, const int* weights, size_t n, stringy_stack** out);
STRINGY_API stringy_status stringy_stack_gm(const int* weights, size_t n, stringy_stack** out);
STRINGY_API void stringy_stack_free(stringy_stack* stack);

/* Valid until stringy_result_free. */
STRINGY_API const char* stringy_result_json(const stringy_result* result);
STRINGY_API int stringy_result_ok(const stringy_result* result);
STRINGY_API void stringy_result_free(stringy_result* result);

/* Sectors for one ell, or for every ell dividing N when ell == 0. */
STRINGY_API stringy_status stringy_sectors(const stringy_stack* stack, int ell, stringy_result** out);

/* Weight table; for G_m quotients max_ell bounds the sectors listed. */
STRINGY_API stringy_status stringy_weights(const stringy_stack* stack, int max_ell, stringy_result** out);

/* Weighted integral, the sector formula for E_str, and for each q the
   groupoid count of every whole sector at the given level compared with
   the symbolic volume. */
STRINGY_API stringy_status stringy_integrate(const stringy_stack* stack, const long* qs, size_t nq, int level,
                                             stringy_result** out);

/* Groupoid count of one cylinder (constraints as JSON, may be NULL) against
   its symbolic volume, for each q. */
STRINGY_API stringy_status stringy_oracle(const stringy_stack* stack, int ell, int a, int level,
                                          const char* constraints_json, const long* qs, size_t nq,
                                          stringy_result** out);

/* Volumes of jets through the subspace where the listed coordinates vanish,
   checked against groupoid counts for each q at levels where enumeration fits. */
STRINGY_API stringy_status stringy_thin_set(const stringy_stack* stack, const int* coords, size_t ncoords, int n_max,
                                            const long* qs, size_t nq, stringy_result** out);

/* Batyrev formula from resolution JSON, or from the built-in resolution of the
   stack when resolution_json is NULL. When both are given the result is
   compared with the sector formula. */
STRINGY_API stringy_status stringy_batyrev(const stringy_stack* stack, const char* resolution_json,
                                           stringy_result** out);

STRINGY_API stringy_status stringy_gorenstein_oracle(const stringy_stack* stack, const long* qs, size_t nq, int n_max,
                                                     int e_max, stringy_result** out);

/* nq == 0 selects the first three primes congruent to 1 mod N. */
STRINGY_API stringy_status stringy_compare(const stringy_stack* stack, const char* resolution_json, const long* qs,
                                           size_t nq, int n_max, int e_max, stringy_result** out);

/* Graded Smith form of a matrix given as JSON. */
STRINGY_API stringy_status stringy_gsnf(const char* matrix_json, int require_certified, stringy_result** out);

/* identity: "height-weight", "crepancy" or "weight-constancy". Samples random
   arcs per sector over F_p with s-precision rounded up to a multiple of ell. */
STRINGY_API stringy_status stringy_verify(const stringy_stack* stack, const char* identity, int samples,
                                          unsigned long long seed, int precision, long p, stringy_result** out);

#ifdef __cplusplus
}
#endif

#endif /* STRINGY_STRINGY_H */
