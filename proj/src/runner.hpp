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

#ifndef IABPLAN_RUNNER_HPP
#define IABPLAN_RUNNER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"

namespace iabplan {

/// One sweep point: the effective inputs plus drop-averaged outputs.
struct ResultRow {
  std::string strategy;         // "fbcp" or "rnd"
  std::optional<double> alpha;  // empty for rnd
  int n_fiber = 0;
  int n_fso = 0;
  double beta_fso = 0.0;
  double p_sbs_dbm = 0.0;
  int n_ue = 0;
  std::uint64_t seed = 0;  // scenario seed of this row
  double mean_cost = 0.0;
  double mean_coverage = 0.0;
  double mean_ee = 0.0;
  int drops = 0;
};

/// Run the configured sweep.  Rows come out in (value, strategy, seed) order
/// and are bit-identical for a given config and master seed regardless of
/// the worker count.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

/// Intersection of two cost curves sampled on a common, strictly increasing
/// grid, by exact linear interpolation between the bracketing grid points.
/// Returns nothing when the difference never changes sign; throws on
/// identical curves or malformed input.
std::optional<double> find_crossover(std::span<const double> grid,
                                     std::span<const double> cost_a,
                                     std::span<const double> cost_b);

enum class ResultFormat { Csv, Json };

ResultFormat result_format_from_string(const std::string& text);

/// Header: strategy,alpha,n_fiber,n_fso,beta_fso,p_sbs_dbm,n_ue,seed,
/// mean_cost,mean_coverage,mean_ee,drops.  Floats carry full round-trip
/// precision; the alpha column is empty for rnd rows.
std::string format_rows_csv(std::span<const ResultRow> rows);

/// The same rows as a JSON array; alpha is null for rnd rows.
std::string format_rows_json(std::span<const ResultRow> rows);

/// Write rows to `path` in the requested format.  Throws on empty rows or
/// an unwritable path.
void emit_results(std::span<const ResultRow> rows, const std::string& path,
                  ResultFormat format);

}  // namespace iabplan

#endif  // IABPLAN_RUNNER_HPP
