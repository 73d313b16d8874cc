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

#include "channel.hpp"

#include <cmath>
#include <stdexcept>

namespace iabplan {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void ChannelParams::validate() const {
  if (!(carrier_ghz > 0.0)) {
    throw std::invalid_argument("channel.carrier_ghz must be > 0");
  }
  if (!(ref_distance_m > 0.0)) {
    throw std::invalid_argument("channel.ref_distance_m must be > 0");
  }
  if (!(ple_los > 0.0) || ple_nlos < ple_los) {
    throw std::invalid_argument("channel: need ple_nlos >= ple_los > 0");
  }
  if (!(g_main_db > g_side_db)) {
    throw std::invalid_argument("channel: need g_main_db > g_side_db");
  }
  if (!(theta_hp_deg > 0.0) || !(theta_hp_deg < 360.0)) {
    throw std::invalid_argument("channel.theta_hp_deg must be in (0, 360)");
  }
}

double los_probability(double d2d_m) {
  if (d2d_m < 0.0) {
    throw std::invalid_argument("los_probability: distance must be >= 0");
  }
  if (d2d_m <= 18.0) return 1.0;
  const double ratio = 18.0 / d2d_m;
  return ratio + std::exp(-d2d_m / 63.0) * (1.0 - ratio);
}

LinkState sample_link_state(double p_los, Rng& rng) {
  if (p_los < 0.0 || p_los > 1.0) {
    throw std::invalid_argument("sample_link_state: p_los must be in [0, 1]");
  }
  return rng.next_bernoulli(p_los) ? LinkState::Los : LinkState::Nlos;
}

double path_loss_db(double d3d_m, LinkState state, const ChannelParams& p) {
  if (d3d_m < p.ref_distance_m) {
    throw std::invalid_argument("path_loss_db: distance below reference");
  }
  // Free-space loss at the reference distance; 32.4 dB corresponds to 1 m
  // and a carrier in GHz.
  const double fspl_ref = 32.4 + 20.0 * std::log10(p.carrier_ghz) +
                          20.0 * std::log10(p.ref_distance_m);
  const double n = (state == LinkState::Los) ? p.ple_los : p.ple_nlos;
  return fspl_ref + 10.0 * n * std::log10(d3d_m / p.ref_distance_m);
}

double wrap_angle_deg(double theta_deg) {
  double t = std::fmod(theta_deg, 360.0);
  if (t > 180.0) t -= 360.0;
  if (t <= -180.0) t += 360.0;
  return t;
}

double antenna_gain_db(double theta_deg, const ChannelParams& p) {
  return (std::fabs(theta_deg) <= p.theta_hp_deg / 2.0) ? p.g_main_db
                                                        : p.g_side_db;
}

double received_power_mw(double p_tx_dbm, const LinkDraw& draw) {
  return dbm_to_mw(p_tx_dbm) * draw.fading * db_to_linear(draw.gain_db) /
         db_to_linear(draw.pathloss_db);
}

double sample_fading(Rng& rng) { return rng.next_exponential(); }

double noise_power_mw(double bandwidth_hz, const ChannelParams& p) {
  if (bandwidth_hz <= 0.0) return 0.0;
  return dbm_to_mw(p.noise_psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) +
                   p.noise_figure_db);
}

}  // namespace iabplan
