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

#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

namespace iabplan {

namespace {

/// Effective inputs of one (sweep value, strategy) combination after axis
/// substitution and per-strategy overrides.
struct EffectivePoint {
  int n_fiber = 0;
  int n_fso = 0;
  int n_ue = 0;
  double alpha = 0.0;  // meaningful for fbcp only
  CostParams cost;
  RadioParams radio;
};

EffectivePoint resolve_point(const ExperimentConfig& cfg, double value,
                             const StrategySpec& strategy) {
  EffectivePoint p;
  p.cost = cfg.cost;
  p.radio = cfg.radio;
  p.n_ue = cfg.scenario.n_ue;
  p.alpha = strategy.alpha;
  p.n_fiber = strategy.n_fiber.value_or(cfg.plan.n_fiber);
  p.n_fso = strategy.n_fso.value_or(cfg.plan.n_fso);
  switch (cfg.sweep.axis) {
    case SweepAxis::NFiber:
      p.n_fiber = static_cast<int>(value);
      break;
    case SweepAxis::BetaFso:
      p.cost.beta_fso = value;
      break;
    case SweepAxis::PSbsDbm:
      p.radio.p_sbs_dbm = value;
      break;
    case SweepAxis::NUe:
      p.n_ue = static_cast<int>(value);
      break;
    case SweepAxis::Alpha:
      p.alpha = value;
      break;
  }
  return p;
}

void check_points(const ExperimentConfig& cfg) {
  for (std::size_t vi = 0; vi < cfg.sweep.values.size(); ++vi) {
    for (std::size_t si = 0; si < cfg.strategies.size(); ++si) {
      const EffectivePoint p =
          resolve_point(cfg, cfg.sweep.values[vi], cfg.strategies[si]);
      if (p.n_fiber + p.n_fso > cfg.scenario.n_sbs) {
        throw ConfigError(
            "strategies[" + std::to_string(si) + "]",
            "n_fiber + n_fso exceeds n_sbs at sweep.values[" +
                std::to_string(vi) + "]");
      }
      if (p.n_ue < 1) {
        throw ConfigError("sweep.values[" + std::to_string(vi) + "]",
                          "need at least one UE");
      }
    }
  }
}

/// Scenario-level state shared by every sweep value of one (strategy, seed)
/// task.  Keyed by the effective UE count; the base-station layout and the
/// plans only depend on the seed, so on the n_ue axis they are rebuilt
/// identically per entry (cheap) while the link tables differ.
struct ScenarioState {
  Scenario scenario;
  BackhaulGraph ring;
  BackhaulGraph design;
  std::unique_ptr<LinkGeometry> geometry;
  std::map<double, std::vector<PlanStep>> plans;  // key: alpha (fbcp), -1 rnd
};

class TaskRunner {
 public:
  TaskRunner(const ExperimentConfig& cfg, std::size_t strategy_index,
             std::size_t seed_index)
      : cfg_(cfg),
        strategy_(cfg.strategies[strategy_index]),
        seed_(Rng::derive(cfg.scenario.master_seed, stream::kScenarioSeed,
                          seed_index)) {}

  ResultRow run_value(std::size_t value_index, std::size_t row_index) {
    const double value = cfg_.sweep.values[value_index];
    const EffectivePoint point = resolve_point(cfg_, value, strategy_);
    ScenarioState& st = state_for(point.n_ue);
    const std::vector<PlanStep>& steps = plan_for(st, point);

    BackhaulGraph graph = apply_plan_prefix(st.ring, steps, point.n_fiber);
    if (point.n_fso > 0) {
      std::vector<int> ranking;
      ranking.reserve(static_cast<std::size_t>(point.n_fso));
      for (int i = 0; i < point.n_fso; ++i) {
        ranking.push_back(
            steps[static_cast<std::size_t>(point.n_fiber + i)].chosen);
      }
      graph = assign_fso(graph, point.n_fso, ranking);
    }

    const double cost = total_cost(graph, point.cost);
    const double p_total = total_power_w(graph, point.radio, cfg_.power);

    double coverage_sum = 0.0;
    double ee_sum = 0.0;
    const int drops = cfg_.scenario.drops;
    for (int d = 0; d < drops; ++d) {
      const std::uint64_t flat =
          static_cast<std::uint64_t>(row_index) *
              static_cast<std::uint64_t>(drops) +
          static_cast<std::uint64_t>(d);
      Rng rng(Rng::derive(cfg_.scenario.master_seed, stream::kDrop, flat));
      const DropResult drop = evaluate_drop(*st.geometry, graph, point.radio,
                                            cfg_.channel, p_total, rng, draws_);
      coverage_sum += drop.coverage;
      ee_sum += drop.ee_bps_per_w;
    }

    ResultRow row;
    row.strategy = strategy_.label();
    if (strategy_.kind == StrategySpec::Kind::Fbcp) row.alpha = point.alpha;
    row.n_fiber = point.n_fiber;
    row.n_fso = point.n_fso;
    row.beta_fso = point.cost.beta_fso;
    row.p_sbs_dbm = point.radio.p_sbs_dbm;
    row.n_ue = point.n_ue;
    row.seed = seed_;
    row.mean_cost = cost;
    row.mean_coverage = coverage_sum / drops;
    row.mean_ee = ee_sum / drops;
    row.drops = drops;
    return row;
  }

 private:
  ScenarioState& state_for(int n_ue) {
    auto it = states_.find(n_ue);
    if (it != states_.end()) return it->second;
    ScenarioState st;
    st.scenario = sample_scenario(cfg_.scenario.region, cfg_.scenario.n_mbs,
                                  cfg_.scenario.n_sbs, n_ue, seed_);
    st.ring = build_mbs_ring(st.scenario);
    Rng order_rng(Rng::derive(seed_, stream::kDesignOrder, 0));
    st.design = plan_connected_topology(st.ring, order_rng);
    st.geometry = std::make_unique<LinkGeometry>(st.scenario, cfg_.channel);
    return states_.emplace(n_ue, std::move(st)).first->second;
  }

  // Plans are cached per alpha; step pricing never involves beta_fso (the
  // only cost field a sweep can vary), so the cache stays valid on every
  // axis.
  const std::vector<PlanStep>& plan_for(ScenarioState& st,
                                        const EffectivePoint& point) {
    const bool rnd = strategy_.kind == StrategySpec::Kind::Rnd;
    const double key = rnd ? -1.0 : point.alpha;
    auto it = st.plans.find(key);
    if (it != st.plans.end()) return it->second;
    const int n_all = static_cast<int>(st.ring.v_iab.size());
    PlanResult full;
    if (rnd) {
      Rng rng(Rng::derive(seed_, stream::kRndPlacement, 0));
      full = random_placement(st.ring, st.design, n_all, rng, point.cost);
    } else {
      full = fbcp(st.ring, st.design, n_all, point.alpha, point.cost);
    }
    return st.plans.emplace(key, std::move(full.steps)).first->second;
  }

  const ExperimentConfig& cfg_;
  StrategySpec strategy_;
  std::uint64_t seed_;
  std::map<int, ScenarioState> states_;
  DropDraws draws_;
};

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  config.validate();
  check_points(config);

  const std::size_t n_values = config.sweep.values.size();
  const std::size_t n_strategies = config.strategies.size();
  const std::size_t n_seeds = static_cast<std::size_t>(config.scenario.seeds);
  std::vector<ResultRow> rows(n_values * n_strategies * n_seeds);

  const std::size_t n_tasks = n_strategies * n_seeds;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const std::size_t n_workers =
      std::min<std::size_t>(config.threads > 0 ? config.threads : hw,
                            std::max<std::size_t>(n_tasks, 1));

  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= n_tasks || failed.load()) break;
      const std::size_t si = task / n_seeds;
      const std::size_t ki = task % n_seeds;
      try {
        TaskRunner runner(config, si, ki);
        for (std::size_t vi = 0; vi < n_values; ++vi) {
          const std::size_t row_index = (vi * n_strategies + si) * n_seeds + ki;
          rows[row_index] = runner.run_value(vi, row_index);
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error_message = e.what();
      }
    }
  };

  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failed.load()) {
    throw std::runtime_error(error_message);
  }
  return rows;
}

std::optional<double> find_crossover(std::span<const double> grid,
                                     std::span<const double> cost_a,
                                     std::span<const double> cost_b) {
  if (grid.size() < 2 || grid.size() != cost_a.size() ||
      grid.size() != cost_b.size()) {
    throw std::invalid_argument(
        "find_crossover: curves must share a grid with >= 2 points");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("find_crossover: grid must be increasing");
    }
  }
  bool identical = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (cost_a[i] != cost_b[i]) {
      identical = false;
      break;
    }
  }
  if (identical) {
    throw std::invalid_argument("find_crossover: identical curves");
  }
  double prev_diff = cost_a[0] - cost_b[0];
  if (prev_diff == 0.0) return grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double diff = cost_a[i] - cost_b[i];
    if (diff == 0.0) return grid[i];
    if ((prev_diff < 0.0) != (diff < 0.0)) {
      const double t = prev_diff / (prev_diff - diff);
      return grid[i - 1] + t * (grid[i] - grid[i - 1]);
    }
    prev_diff = diff;
  }
  return std::nullopt;
}

ResultFormat result_format_from_string(const std::string& text) {
  if (text == "csv") return ResultFormat::Csv;
  if (text == "json") return ResultFormat::Json;
  throw ConfigError("format", "unknown result format: " + text);
}

std::string format_rows_csv(std::span<const ResultRow> rows) {
  std::string out =
      "strategy,alpha,n_fiber,n_fso,beta_fso,p_sbs_dbm,n_ue,seed,"
      "mean_cost,mean_coverage,mean_ee,drops\n";
  for (const ResultRow& r : rows) {
    out += r.strategy;
    out += ',';
    if (r.alpha) out += format_double(*r.alpha);
    out += ',';
    out += std::to_string(r.n_fiber);
    out += ',';
    out += std::to_string(r.n_fso);
    out += ',';
    out += format_double(r.beta_fso);
    out += ',';
    out += format_double(r.p_sbs_dbm);
    out += ',';
    out += std::to_string(r.n_ue);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += format_double(r.mean_cost);
    out += ',';
    out += format_double(r.mean_coverage);
    out += ',';
    out += format_double(r.mean_ee);
    out += ',';
    out += std::to_string(r.drops);
    out += '\n';
  }
  return out;
}

std::string format_rows_json(std::span<const ResultRow> rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const ResultRow& r : rows) {
    nlohmann::json item = {
        {"strategy", r.strategy}, {"n_fiber", r.n_fiber},
        {"n_fso", r.n_fso},       {"beta_fso", r.beta_fso},
        {"p_sbs_dbm", r.p_sbs_dbm}, {"n_ue", r.n_ue},
        {"seed", r.seed},         {"mean_cost", r.mean_cost},
        {"mean_coverage", r.mean_coverage}, {"mean_ee", r.mean_ee},
        {"drops", r.drops},
    };
    if (r.alpha) {
      item["alpha"] = *r.alpha;
    } else {
      item["alpha"] = nullptr;
    }
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

void emit_results(std::span<const ResultRow> rows, const std::string& path,
                  ResultFormat format) {
  if (rows.empty()) {
    throw std::invalid_argument("emit_results: no rows to write");
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("emit_results: cannot open " + path);
  }
  file << (format == ResultFormat::Csv ? format_rows_csv(rows)
                                       : format_rows_json(rows));
  if (!file.good()) {
    throw std::runtime_error("emit_results: write failed for " + path);
  }
}

}  // namespace iabplan
