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

/* Compiled as C: proves the public header needs no C++ compiler. */

#include <stdio.h>
#include <string.h>

#include "iabplan.h"

int main(void) {
  iab_ctx* ctx = NULL;
  char* data = NULL;
  size_t size = 0;
  const char* config =
      "{\"scenario\": {\"region\": {\"width\": 300, \"height\": 300},"
      " \"n_mbs\": 1, \"n_sbs\": 3, \"n_ue\": 8,"
      " \"master_seed\": 4, \"seeds\": 1, \"drops\": 1},"
      " \"sweep\": {\"axis\": \"n_fiber\", \"values\": [0, 3]},"
      " \"strategies\": [{\"type\": \"fbcp\", \"alpha\": 0}]}";

  if (iab_ctx_create(&ctx) != IAB_OK) {
    fprintf(stderr, "context creation failed\n");
    return 1;
  }
  if (iab_ctx_load_config_text(ctx, config) != IAB_OK) {
    fprintf(stderr, "config rejected: %s\n", iab_ctx_last_error(ctx));
    iab_ctx_destroy(ctx);
    return 1;
  }
  if (iab_ctx_run_sweep_to_buffer(ctx, "csv", &data, &size) != IAB_OK) {
    fprintf(stderr, "sweep failed: %s\n", iab_ctx_last_error(ctx));
    iab_ctx_destroy(ctx);
    return 1;
  }
  if (size == 0 || strncmp(data, "strategy,", 9) != 0) {
    fprintf(stderr, "unexpected output\n");
    iab_buffer_free(data);
    iab_ctx_destroy(ctx);
    return 1;
  }
  iab_buffer_free(data);
  iab_ctx_destroy(ctx);
  printf("ok\n");
  return 0;
}
