// Copyright 2026 The iabplan Authors
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

// Command-line front end; talks to the core exclusively through the shared
// library's C API.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "iabplan.h"

namespace {

struct CtxDeleter {
  void operator()(iab_ctx* ctx) const { iab_ctx_destroy(ctx); }
};
using CtxPtr = std::unique_ptr<iab_ctx, CtxDeleter>;

// On failure, print the context's machine-readable error object to stderr
// and return the status as the exit code.
int finish(const iab_ctx* ctx, iab_status status) {
  if (status != IAB_OK) {
    const char* error = iab_ctx_last_error(ctx);
    std::fprintf(stderr, "%s\n",
                 (error && *error) ? error
                                   : "{\"code\":\"internal_error\","
                                     "\"message\":\"unknown failure\"}");
  }
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Backhaul planning and coverage simulation for two-hop IAB "
               "networks with hybrid fiber/FSO deployment"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;

  app.add_option("--config", config_path, "Experiment config JSON file");
  app.add_option("--seed", seed, "Master seed override")
      ->each([&](const std::string&) { seed_set = true; });
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  CLI::App* scenario_cmd =
      app.add_subcommand("scenario", "Generate a node layout and save it");
  scenario_cmd->fallthrough();
  scenario_cmd->add_option("--out", out_path, "Output scenario JSON")
      ->required();

  CLI::App* plan_cmd = app.add_subcommand(
      "plan", "Plan the backhaul topology for one configuration");
  plan_cmd->fallthrough();
  plan_cmd->add_option("--out", out_path, "Output plan JSON")->required();

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run the configured experiment sweep");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("--out", out_path, "Output results file")->required();
  sweep_cmd->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  iab_ctx* raw = nullptr;
  if (iab_ctx_create(&raw) != IAB_OK) {
    std::fprintf(stderr, "{\"code\":\"internal_error\",\"message\":\"cannot "
                         "create context\"}\n");
    return static_cast<int>(IAB_ERR_INTERNAL);
  }
  CtxPtr ctx(raw);

  if (!config_path.empty()) {
    const iab_status status = iab_ctx_load_config_file(ctx.get(), config_path.c_str());
    if (status != IAB_OK) return finish(ctx.get(), status);
  }
  if (seed_set) {
    const iab_status status = iab_ctx_set_master_seed(ctx.get(), seed);
    if (status != IAB_OK) return finish(ctx.get(), status);
  }
  if (threads != 0) {
    const iab_status status = iab_ctx_set_threads(ctx.get(), threads);
    if (status != IAB_OK) return finish(ctx.get(), status);
  }

  iab_status status = IAB_OK;
  if (scenario_cmd->parsed()) {
    status = iab_ctx_write_scenario(ctx.get(), out_path.c_str());
    if (status == IAB_OK) std::printf("wrote %s\n", out_path.c_str());
  } else if (plan_cmd->parsed()) {
    status = iab_ctx_write_plan(ctx.get(), out_path.c_str());
    if (status == IAB_OK) std::printf("wrote %s\n", out_path.c_str());
  } else if (sweep_cmd->parsed()) {
    status = iab_ctx_run_sweep(ctx.get(), out_path.c_str(), format.c_str());
    if (status == IAB_OK) std::printf("wrote %s\n", out_path.c_str());
  }
  return finish(ctx.get(), status);
}
