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

#include "config.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace iabplan {

using nlohmann::json;

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::NFiber:
      return "n_fiber";
    case SweepAxis::BetaFso:
      return "beta_fso";
    case SweepAxis::PSbsDbm:
      return "p_sbs_dbm";
    case SweepAxis::NUe:
      return "n_ue";
    case SweepAxis::Alpha:
      return "alpha";
  }
  return "?";
}

SweepAxis sweep_axis_from_string(const std::string& text) {
  if (text == "n_fiber") return SweepAxis::NFiber;
  if (text == "beta_fso") return SweepAxis::BetaFso;
  if (text == "p_sbs_dbm") return SweepAxis::PSbsDbm;
  if (text == "n_ue") return SweepAxis::NUe;
  if (text == "alpha") return SweepAxis::Alpha;
  throw ConfigError("sweep.axis", "unknown sweep axis: " + text);
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path, path + ": " + message);
}

double get_number(const json& value, const std::string& path) {
  if (!value.is_number()) fail(path, "expected a number");
  return value.get<double>();
}

int get_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<int>();
}

std::uint64_t get_u64(const json& value, const std::string& path) {
  if (!value.is_number_unsigned() && !value.is_number_integer()) {
    fail(path, "expected an unsigned integer");
  }
  if (value.is_number_integer() && value.get<std::int64_t>() < 0) {
    fail(path, "expected an unsigned integer");
  }
  return value.get<std::uint64_t>();
}

std::string get_string(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.get<std::string>();
}

const json& expect_object(const json& value, const std::string& path) {
  if (!value.is_object()) fail(path, "expected an object");
  return value;
}

void parse_scenario(const json& block, ScenarioConfig& out) {
  for (const auto& [key, value] : expect_object(block, "scenario").items()) {
    const std::string path = "scenario." + key;
    if (key == "region") {
      for (const auto& [rkey, rvalue] : expect_object(value, path).items()) {
        const std::string rpath = path + "." + rkey;
        if (rkey == "width") {
          out.region.width = get_number(rvalue, rpath);
        } else if (rkey == "height") {
          out.region.height = get_number(rvalue, rpath);
        } else {
          fail(rpath, "unknown key");
        }
      }
    } else if (key == "n_mbs") {
      out.n_mbs = get_int(value, path);
    } else if (key == "n_sbs") {
      out.n_sbs = get_int(value, path);
    } else if (key == "n_ue") {
      out.n_ue = get_int(value, path);
    } else if (key == "master_seed") {
      out.master_seed = get_u64(value, path);
    } else if (key == "seeds") {
      out.seeds = get_int(value, path);
    } else if (key == "drops") {
      out.drops = get_int(value, path);
    } else {
      fail(path, "unknown key");
    }
  }
}

void parse_channel(const json& block, ChannelParams& out) {
  for (const auto& [key, value] : expect_object(block, "channel").items()) {
    const std::string path = "channel." + key;
    if (key == "carrier_ghz") {
      out.carrier_ghz = get_number(value, path);
    } else if (key == "ref_distance_m") {
      out.ref_distance_m = get_number(value, path);
    } else if (key == "ple_los") {
      out.ple_los = get_number(value, path);
    } else if (key == "ple_nlos") {
      out.ple_nlos = get_number(value, path);
    } else if (key == "g_main_db") {
      out.g_main_db = get_number(value, path);
    } else if (key == "g_side_db") {
      out.g_side_db = get_number(value, path);
    } else if (key == "theta_hp_deg") {
      out.theta_hp_deg = get_number(value, path);
    } else if (key == "noise_psd_dbm_hz") {
      out.noise_psd_dbm_hz = get_number(value, path);
    } else if (key == "noise_figure_db") {
      out.noise_figure_db = get_number(value, path);
    } else {
      fail(path, "unknown key");
    }
  }
}

void parse_radio(const json& block, RadioParams& out) {
  for (const auto& [key, value] : expect_object(block, "radio").items()) {
    const std::string path = "radio." + key;
    if (key == "total_bw_hz") {
      out.total_bw_hz = get_number(value, path);
    } else if (key == "beta_split") {
      out.beta_split = get_number(value, path);
    } else if (key == "p_mbs_dbm") {
      out.p_mbs_dbm = get_number(value, path);
    } else if (key == "p_sbs_dbm") {
      out.p_sbs_dbm = get_number(value, path);
    } else if (key == "eta_bps") {
      out.eta_bps = get_number(value, path);
    } else {
      fail(path, "unknown key");
    }
  }
}

void parse_cost(const json& block, CostParams& out) {
  for (const auto& [key, value] : expect_object(block, "cost").items()) {
    const std::string path = "cost." + key;
    if (key == "beta_dig") {
      out.beta_dig = get_number(value, path);
    } else if (key == "beta_fiber") {
      out.beta_fiber = get_number(value, path);
    } else if (key == "beta_trx") {
      out.beta_trx = get_number(value, path);
    } else if (key == "beta_fso") {
      out.beta_fso = get_number(value, path);
    } else {
      fail(path, "unknown key");
    }
  }
}

void parse_power(const json& block, PowerParams& out) {
  for (const auto& [key, value] : expect_object(block, "power").items()) {
    const std::string path = "power." + key;
    if (key == "fiber_loss_w_per_km") {
      out.fiber_loss_w_per_km = get_number(value, path);
    } else if (key == "trx_power_w") {
      out.trx_power_w = get_number(value, path);
    } else if (key == "transceivers_per_fiber_link") {
      out.transceivers_per_fiber_link = get_int(value, path);
    } else {
      fail(path, "unknown key");
    }
  }
}

void parse_plan(const json& block, PlanConfig& out) {
  for (const auto& [key, value] : expect_object(block, "plan").items()) {
    const std::string path = "plan." + key;
    if (key == "n_fiber") {
      out.n_fiber = get_int(value, path);
    } else if (key == "n_fso") {
      out.n_fso = get_int(value, path);
    } else {
      fail(path, "unknown key");
    }
  }
}

void parse_sweep(const json& block, SweepConfig& out) {
  for (const auto& [key, value] : expect_object(block, "sweep").items()) {
    const std::string path = "sweep." + key;
    if (key == "axis") {
      out.axis = sweep_axis_from_string(get_string(value, path));
    } else if (key == "values") {
      if (!value.is_array()) fail(path, "expected an array");
      out.values.clear();
      int index = 0;
      for (const json& item : value) {
        out.values.push_back(
            get_number(item, path + "[" + std::to_string(index) + "]"));
        ++index;
      }
    } else {
      fail(path, "unknown key");
    }
  }
}

StrategySpec parse_strategy(const json& block, const std::string& path) {
  StrategySpec out;
  bool has_type = false;
  for (const auto& [key, value] : expect_object(block, path).items()) {
    const std::string kpath = path + "." + key;
    if (key == "type") {
      const std::string type = get_string(value, kpath);
      if (type == "fbcp") {
        out.kind = StrategySpec::Kind::Fbcp;
      } else if (type == "rnd") {
        out.kind = StrategySpec::Kind::Rnd;
      } else {
        fail(kpath, "unknown strategy type: " + type);
      }
      has_type = true;
    } else if (key == "alpha") {
      out.alpha = get_number(value, kpath);
    } else if (key == "n_fiber") {
      out.n_fiber = get_int(value, kpath);
    } else if (key == "n_fso") {
      out.n_fso = get_int(value, kpath);
    } else {
      fail(kpath, "unknown key");
    }
  }
  if (!has_type) fail(path + ".type", "strategy type is required");
  return out;
}

}  // namespace

ExperimentConfig config_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError("", std::string("config parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  for (const auto& [key, value] : expect_object(doc, "").items()) {
    if (key == "scenario") {
      parse_scenario(value, cfg.scenario);
    } else if (key == "channel") {
      parse_channel(value, cfg.channel);
    } else if (key == "radio") {
      parse_radio(value, cfg.radio);
    } else if (key == "cost") {
      parse_cost(value, cfg.cost);
    } else if (key == "power") {
      parse_power(value, cfg.power);
    } else if (key == "plan") {
      parse_plan(value, cfg.plan);
    } else if (key == "sweep") {
      parse_sweep(value, cfg.sweep);
    } else if (key == "strategies") {
      if (!value.is_array()) fail("strategies", "expected an array");
      cfg.strategies.clear();
      int index = 0;
      for (const json& item : value) {
        cfg.strategies.push_back(parse_strategy(
            item, "strategies[" + std::to_string(index) + "]"));
        ++index;
      }
    } else if (key == "threads") {
      cfg.threads = get_int(value, "threads");
    } else {
      fail(key, "unknown key");
    }
  }
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  if (!scenario.region.valid()) {
    fail("scenario.region", "region must have positive width and height");
  }
  if (scenario.n_mbs < 0 || scenario.n_sbs < 0) {
    fail("scenario.n_mbs", "base station counts must be >= 0");
  }
  if (scenario.n_ue < 1 && sweep.axis != SweepAxis::NUe) {
    fail("scenario.n_ue", "need at least one UE");
  }
  if (scenario.seeds < 1) fail("scenario.seeds", "need at least one seed");
  if (scenario.drops < 1) fail("scenario.drops", "need at least one drop");
  if (threads < 0) fail("threads", "must be >= 0");
  try {
    channel.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("channel", e.what());
  }
  try {
    radio.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("radio", e.what());
  }
  try {
    cost.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("cost", e.what());
  }
  try {
    power.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("power", e.what());
  }
  if (sweep.values.empty()) fail("sweep.values", "must not be empty");
  if (strategies.empty()) fail("strategies", "need at least one strategy");
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    const StrategySpec& s = strategies[i];
    const std::string path = "strategies[" + std::to_string(i) + "]";
    if (s.kind == StrategySpec::Kind::Fbcp &&
        (s.alpha < 0.0 || s.alpha > 1.0)) {
      fail(path + ".alpha", "must be in [0, 1]");
    }
    // Feasibility against n_sbs is checked on the *effective* deployment of
    // every sweep point when the experiment starts; the defaults here may
    // exceed a small custom scenario without being used.
    if (s.n_fiber && *s.n_fiber < 0) fail(path + ".n_fiber", "must be >= 0");
    if (s.n_fso && *s.n_fso < 0) fail(path + ".n_fso", "must be >= 0");
  }
  if (plan.n_fiber < 0) fail("plan.n_fiber", "must be >= 0");
  if (plan.n_fso < 0) fail("plan.n_fso", "must be >= 0");
  // Axis-specific value checks.
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    const double v = sweep.values[i];
    const std::string path = "sweep.values[" + std::to_string(i) + "]";
    switch (sweep.axis) {
      case SweepAxis::NFiber:
      case SweepAxis::NUe: {
        if (v < (sweep.axis == SweepAxis::NUe ? 1.0 : 0.0) ||
            v != std::floor(v)) {
          fail(path, "must be a non-negative integer");
        }
        break;
      }
      case SweepAxis::BetaFso:
        if (v < 0.0) fail(path, "must be >= 0");
        break;
      case SweepAxis::Alpha:
        if (v < 0.0 || v > 1.0) fail(path, "must be in [0, 1]");
        break;
      case SweepAxis::PSbsDbm:
        break;
    }
  }
}

}  // namespace iabplan
