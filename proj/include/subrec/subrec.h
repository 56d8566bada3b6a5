// Copyright 2026 The subrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the subrec library. Morphisms are opaque handles; every
 * analysis returns a status code and, on success, a JSON document that the
 * caller releases with subrec_string_free. On failure the message of the
 * last error on the calling thread is available from subrec_last_error.
 */

#ifndef SUBREC_SUBREC_H_
#define SUBREC_SUBREC_H_

#include <stddef.h>

#if defined(SUBREC_BUILDING_LIBRARY)
#define SUBREC_API __attribute__((visibility("default")))
#else
#define SUBREC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct subrec_morphism subrec_morphism;

typedef enum subrec_status {
  SUBREC_OK             = 0,
  SUBREC_INPUT_ERROR    = 2, /* malformed file, bad argument, unmet precondition */
  SUBREC_RESOURCE_ERROR = 3, /* a size or window cap was reached */
  SUBREC_INTERNAL_ERROR = 4
} subrec_status;

typedef struct subrec_analyze_options {
  size_t radius;    /* window radius for the empirical constant, default 1000 */
  size_t max_delay; /* largest length tried for the synchronizing delay, default 24 */
  size_t n_report;  /* complexities reported, default 16 */
  int    safe_d;    /* nonzero: d = #A in the bounds */
} subrec_analyze_options;

SUBREC_API const char* subrec_version(void);

/* Message and error kind name ("EmptyImage", ...) of the last failure on this thread. */
SUBREC_API const char* subrec_last_error(void);
SUBREC_API const char* subrec_last_error_kind(void);

SUBREC_API void subrec_analyze_options_init(subrec_analyze_options* options);

SUBREC_API subrec_status subrec_morphism_parse(const char* text, subrec_morphism** out);
SUBREC_API subrec_status subrec_morphism_load(const char* path, subrec_morphism** out);
SUBREC_API void          subrec_morphism_free(subrec_morphism* morphism);

SUBREC_API size_t subrec_morphism_size(const subrec_morphism* morphism);

SUBREC_API subrec_status subrec_is_primitive(const subrec_morphism* morphism,
                                             int*                   primitive,
                                             unsigned*              witness);

/* |sigma^n| and <sigma^n> as decimal strings. */
SUBREC_API subrec_status subrec_extreme_lengths(const subrec_morphism* morphism,
                                                unsigned long long     n,
                                                char**                 widest,
                                                char**                 narrowest);

SUBREC_API subrec_status subrec_analyze(const subrec_morphism*        morphism,
                                        const subrec_analyze_options* options,
                                        char**                        json);

/* Renders a JSON report from subrec_analyze as text tables (or pretty JSON). */
SUBREC_API subrec_status subrec_render_report(const char* json, int as_json, char** text);

/* certified = 0 measures k and N; the closed-form bound is included. */
SUBREC_API subrec_status subrec_bound(const subrec_morphism* morphism,
                                      int                    certified,
                                      int                    safe_d,
                                      char**                 json);

SUBREC_API subrec_status subrec_delay(const subrec_morphism* morphism, size_t n_max, char** json);

/* "ok" in the result is false when a counterexample was found. */
SUBREC_API subrec_status subrec_verify(const subrec_morphism* morphism,
                                       size_t                 L,
                                       unsigned               level,
                                       size_t                 radius,
                                       char**                 json);

SUBREC_API subrec_status subrec_language(const subrec_morphism* morphism, size_t n, char** json);

/* max_power = 0 uses the default cap 2(#A)^2. */
SUBREC_API subrec_status subrec_seeds(const subrec_morphism* morphism, unsigned max_power, char** json);

/* Tab separated position, letter and cut levels of the window for the first seed. */
SUBREC_API subrec_status subrec_window_dump(const subrec_morphism* morphism,
                                            size_t                 radius,
                                            unsigned               max_level,
                                            char**                 text);

SUBREC_API void subrec_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* SUBREC_SUBREC_H_ */
