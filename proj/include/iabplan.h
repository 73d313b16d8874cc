/* Copyright 2026 The iabplan Authors
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

/* Shared-library interface of the iabplan toolkit.
 *
 * All entry points operate on an opaque context that carries the experiment
 * configuration and the last error.  Functions return IAB_OK on success; on
 * failure they return a status code and iab_ctx_last_error() yields a JSON
 * object {"code": ..., "message": ..., "field": ...} describing the problem.
 */

#ifndef IABPLAN_H
#define IABPLAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IABPLAN_API __declspec(dllexport)
#else
#define IABPLAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iab_status {
  IAB_OK = 0,
  IAB_ERR_INVALID_ARGUMENT = 1,
  IAB_ERR_PARSE = 2,
  IAB_ERR_IO = 3,
  IAB_ERR_INTERNAL = 4
} iab_status;

typedef struct iab_ctx iab_ctx;

IABPLAN_API const char* iab_version(void);

/* Context lifecycle.  A fresh context holds the documented defaults. */
IABPLAN_API iab_status iab_ctx_create(iab_ctx** out_ctx);
IABPLAN_API void iab_ctx_destroy(iab_ctx* ctx);

/* JSON error object of the most recent failing call, or "" if none. */
IABPLAN_API const char* iab_ctx_last_error(const iab_ctx* ctx);

/* Replace the configuration from a JSON document (file or string). */
IABPLAN_API iab_status iab_ctx_load_config_file(iab_ctx* ctx, const char* path);
IABPLAN_API iab_status iab_ctx_load_config_text(iab_ctx* ctx, const char* json_text);

/* Overrides applied on top of the loaded configuration. */
IABPLAN_API iab_status iab_ctx_set_master_seed(iab_ctx* ctx, uint64_t seed);
IABPLAN_API iab_status iab_ctx_set_threads(iab_ctx* ctx, int threads);

/* Sample the configured layout and write it as scenario JSON. */
IABPLAN_API iab_status iab_ctx_write_scenario(iab_ctx* ctx, const char* out_path);

/* Build the backhaul plan for the configured deployment (first strategy,
 * plan block) and write the plan JSON. */
IABPLAN_API iab_status iab_ctx_write_plan(iab_ctx* ctx, const char* out_path);

/* Run the configured sweep and write rows; format is "csv" or "json". */
IABPLAN_API iab_status iab_ctx_run_sweep(iab_ctx* ctx, const char* out_path,
                                         const char* format);

/* As iab_ctx_run_sweep but into a heap buffer owned by the caller; release
 * it with iab_buffer_free. */
IABPLAN_API iab_status iab_ctx_run_sweep_to_buffer(iab_ctx* ctx,
                                                   const char* format,
                                                   char** out_data,
                                                   size_t* out_size);
IABPLAN_API void iab_buffer_free(char* data);

#ifdef __cplusplus
}
#endif

#endif /* IABPLAN_H */
