/* Copyright 2026 The euler-arnold Authors
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

#ifndef EULER_ARNOLD_H_
#define EULER_ARNOLD_H_

/* C interface to the euler-arnold solver. All objects are opaque handles
 * owned by the caller and released with the matching *_free function.
 * Every call that can fail returns an ea_status; the message of the most
 * recent failure on the calling thread is available from ea_last_error(). */

#include <stddef.h>

#if defined(EA_BUILDING_LIBRARY)
#define EA_API __attribute__((visibility("default")))
#else
#define EA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ea_status {
  EA_OK = 0,
  EA_ERR_INVALID_ARGUMENT = 1, /* null pointer, index out of range, bad name */
  EA_ERR_CONFIG = 2,           /* malformed or inconsistent configuration */
  EA_ERR_IO = 3,               /* file could not be read or written */
  EA_ERR_DIVERGED = 4,         /* blow-up detected; partial results kept */
  EA_ERR_INTERNAL = 5
} ea_status;

typedef struct ea_config ea_config;
typedef struct ea_run ea_run;

EA_API const char* ea_version(void);
EA_API const char* ea_status_name(ea_status status);

/* Message of the last failed call on this thread, "" if none. Valid until
 * the next failing call on the same thread. */
EA_API const char* ea_last_error(void);
/* Config line the last error refers to, 0 when not applicable. */
EA_API int ea_last_error_line(void);

/* Releases strings returned through char** out-parameters. */
EA_API void ea_string_free(char* s);

/* Model catalog, in stable order. Returned strings are static. */
EA_API size_t ea_model_count(void);
EA_API ea_status ea_model_info(size_t index, const char** name, const char** domain, const char** state_shape,
                               const char** params, const char** anchor);

/* Configuration. */
EA_API ea_status ea_config_parse(const char* text, ea_config** out);
EA_API ea_status ea_config_load(const char* path, ea_config** out);
/* Canonical JSON; parsing it back yields an identical configuration. */
EA_API ea_status ea_config_dump(const ea_config* config, char** out);
EA_API ea_status ea_config_set_output_directory(ea_config* config, const char* directory);
EA_API ea_status ea_config_equal(const ea_config* a, const ea_config* b, int* equal);
EA_API void ea_config_free(ea_config* config);

/* Runs. ea_run_simulate keeps results in memory only; ea_run_execute also
 * writes series.csv and snapshots. Both return EA_ERR_DIVERGED with *out set
 * to the partial run when blow-up is detected. */
EA_API ea_status ea_run_simulate(const ea_config* config, ea_run** out);
EA_API ea_status ea_run_execute(const ea_config* config, ea_run** out);
EA_API void ea_run_free(ea_run* run);

/* 1 if the run stopped early, with the time of failure in *time. */
EA_API ea_status ea_run_diverged(const ea_run* run, int* diverged, double* time);
EA_API size_t ea_run_record_count(const ea_run* run);
/* Columns are time, energy, then the model's invariants. */
EA_API size_t ea_run_column_count(const ea_run* run);
EA_API ea_status ea_run_column_name(const ea_run* run, size_t column, const char** name);
EA_API ea_status ea_run_value(const ea_run* run, size_t record, size_t column, double* value);
EA_API size_t ea_run_file_count(const ea_run* run);
EA_API ea_status ea_run_file(const ea_run* run, size_t index, const char** path);

/* Verification suites: "oracle", "conservation", "convergence", "monitors"
 * or "all". The callback sees each criterion once, in criterion order; its
 * strings are valid only during the call. */
typedef struct ea_criterion_result {
  int id;
  const char* title;
  int passed;
  double seconds;
  double budget_seconds;
  const char* summary; /* one-line verdict */
  const char* details; /* newline-separated measurements */
  const char* error;   /* "" unless the check threw */
} ea_criterion_result;

typedef void (*ea_verify_callback)(const ea_criterion_result* result, void* user);

/* threads <= 0 reads EA_NUM_THREADS (default 1). */
EA_API ea_status ea_verify(const char* suite, int threads, ea_verify_callback callback, void* user,
                           int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* EULER_ARNOLD_H_ */
