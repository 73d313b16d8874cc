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

#ifndef IABPLAN_CHANNEL_HPP
#define IABPLAN_CHANNEL_HPP

#include "rng.hpp"

namespace iabplan {

/// mmWave propagation constants: close-in path-loss model with distinct
/// LoS/NLoS exponents, a two-level sector antenna pattern and thermal noise.
struct ChannelParams {
  double carrier_ghz = 28.0;
  double ref_distance_m = 1.0;
  double ple_los = 2.0;
  double ple_nlos = 3.0;
  double g_main_db = 24.0;
  double g_side_db = -2.0;
  double theta_hp_deg = 30.0;        // half-power beamwidth
  double noise_psd_dbm_hz = -174.0;  // thermal noise density
  double noise_figure_db = 7.0;

  void validate() const;  // throws std::invalid_argument
};

enum class LinkState { Los, Nlos };

/// One sampled link: blockage state, small-scale power fading, combined
/// antenna gain of both ends and path loss.
struct LinkDraw {
  LinkState state = LinkState::Los;
  double fading = 1.0;        // unit-mean exponential power gain
  double gain_db = 0.0;       // combined two-ended pattern gain
  double pathloss_db = 0.0;
};

/// 3GPP TR 38.901 urban-macro LoS probability (UE height <= 13 m):
/// 1 for d <= 18 m, else 18/d + exp(-d/63) * (1 - 18/d).
double los_probability(double d2d_m);

LinkState sample_link_state(double p_los, Rng& rng);

/// Close-in model: FSPL(ref, f) + 10 * n * log10(d / ref).
double path_loss_db(double d3d_m, LinkState state, const ChannelParams& p);

/// Two-level sector pattern: g_main within +-theta_hp/2 (inclusive), else
/// g_side.  theta must already be wrapped to (-180, 180].
double antenna_gain_db(double theta_deg, const ChannelParams& p);

/// Wrap any angle to (-180, 180].
double wrap_angle_deg(double theta_deg);

/// Linear received power: P_tx * h * G / L.
double received_power_mw(double p_tx_dbm, const LinkDraw& draw);

/// Unit-mean exponential power gain (squared magnitude of a normalized
/// Rayleigh envelope).
double sample_fading(Rng& rng);

/// Thermal noise over `bandwidth_hz` including the noise figure, in mW.
/// Zero bandwidth gives zero noise.
double noise_power_mw(double bandwidth_hz, const ChannelParams& p);

double db_to_linear(double db);
double dbm_to_mw(double dbm);
double dbm_to_w(double dbm);

}  // namespace iabplan

#endif  // IABPLAN_CHANNEL_HPP
