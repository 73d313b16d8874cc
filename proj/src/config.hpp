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

#ifndef IABPLAN_CONFIG_HPP
#define IABPLAN_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "channel.hpp"
#include "planning.hpp"
#include "radio.hpp"
#include "scenario.hpp"

namespace iabplan {

/// Configuration / input errors carry the dotted path of the offending
/// field so callers can report machine-readable diagnostics.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ScenarioConfig {
  Region region{1000.0, 1000.0};
  int n_mbs = 5;
  int n_sbs = 80;
  int n_ue = 1000;
  std::uint64_t master_seed = 1;
  int seeds = 20;  // scenario seeds per sweep point
  int drops = 50;  // Monte Carlo drops per row
};

enum class SweepAxis { NFiber, BetaFso, PSbsDbm, NUe, Alpha };

const char* to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& text);  // throws ConfigError

struct StrategySpec {
  enum class Kind { Fbcp, Rnd };
  Kind kind = Kind::Fbcp;
  double alpha = 0.0;            // fbcp only
  std::optional<int> n_fiber;    // per-strategy deployment override
  std::optional<int> n_fso;
  const char* label() const { return kind == Kind::Fbcp ? "fbcp" : "rnd"; }
};

struct PlanConfig {
  int n_fiber = 40;
  int n_fso = 0;
};

struct SweepConfig {
  SweepAxis axis = SweepAxis::NFiber;
  std::vector<double> values{0, 10, 20, 30, 40, 50, 60, 70, 80};
};

struct ExperimentConfig {
  ScenarioConfig scenario;
  ChannelParams channel;
  RadioParams radio;
  CostParams cost;
  PowerParams power;
  PlanConfig plan;
  SweepConfig sweep;
  std::vector<StrategySpec> strategies{
      StrategySpec{StrategySpec::Kind::Fbcp, 0.0, {}, {}},
      StrategySpec{StrategySpec::Kind::Fbcp, 1.0, {}, {}},
      StrategySpec{StrategySpec::Kind::Rnd, 0.0, {}, {}},
  };
  int threads = 0;  // 0 = all hardware threads; never changes results

  /// Field-by-field validation; throws ConfigError with the dotted path.
  void validate() const;
};

/// Parse a config document.  Every field is optional and defaults to the
/// values above; unknown keys are rejected.
ExperimentConfig config_from_json(const std::string& json_text);

}  // namespace iabplan

#endif  // IABPLAN_CONFIG_HPP
