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

#include "iabplan.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "planning.hpp"
#include "runner.hpp"
#include "scenario.hpp"

struct iab_ctx {
  iabplan::ExperimentConfig config;
  std::string last_error;
};

namespace {

using iabplan::ConfigError;

const char* status_name(iab_status status) {
  switch (status) {
    case IAB_OK:
      return "ok";
    case IAB_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case IAB_ERR_PARSE:
      return "parse_error";
    case IAB_ERR_IO:
      return "io_error";
    case IAB_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

void set_error(iab_ctx* ctx, iab_status status, const std::string& message,
               const std::string& field = "") {
  if (!ctx) return;
  nlohmann::json doc = {{"code", status_name(status)}, {"message", message}};
  if (!field.empty()) doc["field"] = field;
  ctx->last_error = doc.dump();
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs `fn`, translating exceptions into status codes + the ctx error slot.
template <typename Fn>
iab_status guarded(iab_ctx* ctx, Fn&& fn) {
  if (!ctx) return IAB_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    fn();
    return IAB_OK;
  } catch (const ConfigError& e) {
    set_error(ctx, IAB_ERR_PARSE, e.what(), e.field());
    return IAB_ERR_PARSE;
  } catch (const IoError& e) {
    set_error(ctx, IAB_ERR_IO, e.what());
    return IAB_ERR_IO;
  } catch (const std::invalid_argument& e) {
    set_error(ctx, IAB_ERR_INVALID_ARGUMENT, e.what());
    return IAB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(ctx, IAB_ERR_INTERNAL, e.what());
    return IAB_ERR_INTERNAL;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw IoError("read failed for " + path);
  return buffer.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  file << data;
  if (!file.good()) throw IoError("write failed for " + path);
}

std::string run_sweep_text(iab_ctx* ctx, const char* format) {
  const iabplan::ResultFormat fmt = iabplan::result_format_from_string(
      format && *format ? format : "csv");
  const std::vector<iabplan::ResultRow> rows =
      iabplan::run_experiment(ctx->config);
  return fmt == iabplan::ResultFormat::Csv
             ? iabplan::format_rows_csv(rows)
             : iabplan::format_rows_json(rows);
}

}  // namespace

extern "C" {

const char* iab_version(void) { return "iabplan 1.0.0"; }

iab_status iab_ctx_create(iab_ctx** out_ctx) {
  if (!out_ctx) return IAB_ERR_INVALID_ARGUMENT;
  try {
    *out_ctx = new iab_ctx();
    return IAB_OK;
  } catch (...) {
    *out_ctx = nullptr;
    return IAB_ERR_INTERNAL;
  }
}

void iab_ctx_destroy(iab_ctx* ctx) { delete ctx; }

const char* iab_ctx_last_error(const iab_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

iab_status iab_ctx_load_config_file(iab_ctx* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path) throw std::invalid_argument("path must not be null");
    ctx->config = iabplan::config_from_json(read_file(path));
  });
}

iab_status iab_ctx_load_config_text(iab_ctx* ctx, const char* json_text) {
  return guarded(ctx, [&] {
    if (!json_text) throw std::invalid_argument("json_text must not be null");
    ctx->config = iabplan::config_from_json(json_text);
  });
}

iab_status iab_ctx_set_master_seed(iab_ctx* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->config.scenario.master_seed = seed; });
}

iab_status iab_ctx_set_threads(iab_ctx* ctx, int threads) {
  return guarded(ctx, [&] {
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    ctx->config.threads = threads;
  });
}

iab_status iab_ctx_write_scenario(iab_ctx* ctx, const char* out_path) {
  return guarded(ctx, [&] {
    if (!out_path) throw std::invalid_argument("out_path must not be null");
    const auto& sc = ctx->config.scenario;
    const iabplan::Scenario s = iabplan::sample_scenario(
        sc.region, sc.n_mbs, sc.n_sbs, sc.n_ue, sc.master_seed);
    write_file(out_path, iabplan::save_scenario(s));
  });
}

iab_status iab_ctx_write_plan(iab_ctx* ctx, const char* out_path) {
  return guarded(ctx, [&] {
    if (!out_path) throw std::invalid_argument("out_path must not be null");
    const iabplan::ExperimentConfig& cfg = ctx->config;
    const auto& sc = cfg.scenario;
    const iabplan::Scenario s = iabplan::sample_scenario(
        sc.region, sc.n_mbs, sc.n_sbs, sc.n_ue, sc.master_seed);
    const iabplan::BackhaulGraph ring = iabplan::build_mbs_ring(s);
    iabplan::Rng order_rng(
        iabplan::Rng::derive(sc.master_seed, iabplan::stream::kDesignOrder, 0));
    const iabplan::BackhaulGraph design =
        iabplan::plan_connected_topology(ring, order_rng);

    const iabplan::StrategySpec strategy = cfg.strategies.front();
    const int n_fiber = strategy.n_fiber.value_or(cfg.plan.n_fiber);
    const int n_fso = strategy.n_fso.value_or(cfg.plan.n_fso);
    if (n_fiber + n_fso > sc.n_sbs) {
      throw ConfigError("plan", "n_fiber + n_fso exceeds n_sbs");
    }
    iabplan::PlanResult plan;
    if (strategy.kind == iabplan::StrategySpec::Kind::Rnd) {
      iabplan::Rng rng(iabplan::Rng::derive(sc.master_seed,
                                            iabplan::stream::kRndPlacement, 0));
      plan = iabplan::random_placement(ring, design, n_fiber + n_fso, rng,
                                       cfg.cost);
    } else {
      plan = iabplan::fbcp(ring, design, n_fiber + n_fso, strategy.alpha,
                           cfg.cost);
    }
    iabplan::BackhaulGraph graph =
        iabplan::apply_plan_prefix(ring, plan.steps, n_fiber);
    std::vector<int> ranking;
    for (int i = 0; i < n_fso; ++i) {
      ranking.push_back(plan.steps[static_cast<std::size_t>(n_fiber + i)].chosen);
    }
    if (n_fso > 0) graph = iabplan::assign_fso(graph, n_fso, ranking);
    const std::vector<iabplan::PlanStep> fiber_steps(
        plan.steps.begin(), plan.steps.begin() + n_fiber);
    write_file(out_path, iabplan::export_plan_json(graph, design, fiber_steps,
                                                   cfg.cost));
  });
}

iab_status iab_ctx_run_sweep(iab_ctx* ctx, const char* out_path,
                             const char* format) {
  return guarded(ctx, [&] {
    if (!out_path) throw std::invalid_argument("out_path must not be null");
    write_file(out_path, run_sweep_text(ctx, format));
  });
}

iab_status iab_ctx_run_sweep_to_buffer(iab_ctx* ctx, const char* format,
                                       char** out_data, size_t* out_size) {
  return guarded(ctx, [&] {
    if (!out_data || !out_size) {
      throw std::invalid_argument("output pointers must not be null");
    }
    const std::string text = run_sweep_text(ctx, format);
    char* data = static_cast<char*>(std::malloc(text.size() + 1));
    if (!data) throw std::bad_alloc();
    std::memcpy(data, text.data(), text.size() + 1);
    *out_data = data;
    *out_size = text.size();
  });
}

void iab_buffer_free(char* data) { std::free(data); }

}  // extern "C"
