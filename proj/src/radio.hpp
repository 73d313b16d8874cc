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

#ifndef IABPLAN_RADIO_HPP
#define IABPLAN_RADIO_HPP

#include <span>
#include <vector>

#include "channel.hpp"
#include "planning.hpp"
#include "scenario.hpp"

namespace iabplan {

struct RadioParams {
  double total_bw_hz = 1e9;   // W
  double beta_split = 0.8;    // backhaul share of W
  double p_mbs_dbm = 40.0;
  double p_sbs_dbm = 24.0;
  double eta_bps = 1e8;       // service rate threshold

  void validate() const;  // throws std::invalid_argument
};

struct PowerParams {
  double fiber_loss_w_per_km = 1.0;
  double trx_power_w = 8.0;
  int transceivers_per_fiber_link = 2;

  void validate() const;  // throws std::invalid_argument
};

/// (W_bh, W_ac) with W_bh = beta * W and W_ac = W - W_bh so that the two
/// shares always sum to W exactly.
std::pair<double, double> split_bandwidth(const RadioParams& p);

/// Distance/angle/path-loss tables for one scenario, fixed across drops.
/// UE-BS entries are indexed ue_idx * n_bs + bs_idx; backhaul entries
/// sbs_idx * n_mbs + mbs_idx.  Distances below the close-in reference are
/// clamped to the reference before the path-loss evaluation.
struct LinkGeometry {
  LinkGeometry(const Scenario& s, const ChannelParams& cp);

  int n_mbs = 0;
  int n_bs = 0;  // MBS + SBS
  int n_ue = 0;

  std::vector<double> ue_plinv_los, ue_plinv_nlos, ue_plos;
  std::vector<double> ue_ang_tx_deg, ue_ang_rx_deg;  // at BS / at UE
  std::vector<double> bh_plinv_los, bh_plinv_nlos, bh_plos;
  std::vector<double> bh_ang_tx_deg, bh_ang_rx_deg;  // at MBS / at SBS

  double g_main_lin = 1.0;
  double g_side_lin = 1.0;
  double half_beam_deg = 15.0;

  std::size_t ue_pair(int ue_idx, int bs_id) const {
    return static_cast<std::size_t>(ue_idx) * static_cast<std::size_t>(n_bs) +
           static_cast<std::size_t>(bs_id);
  }
  std::size_t bh_pair(int sbs_id, int mbs_id) const {
    return static_cast<std::size_t>(sbs_id - n_mbs) *
               static_cast<std::size_t>(n_mbs) +
           static_cast<std::size_t>(mbs_id);
  }
};

/// Per-drop randomness.  Draw order is fixed: beam azimuths by BS id, then
/// UE-BS links in (ue, bs) order, then backhaul links in (sbs, mbs) order.
struct DropDraws {
  std::vector<double> beam_az_deg;   // per BS id
  std::vector<std::uint8_t> ue_los;  // per UE-BS pair
  std::vector<double> ue_fading;
  std::vector<std::uint8_t> bh_los;  // per SBS-MBS pair
  std::vector<double> bh_fading;

  void sample(const LinkGeometry& geom, Rng& rng);
};

/// Who serves whom in one drop, with the share counters of the rate model.
struct Association {
  std::vector<int> serving_bs;        // per UE idx -> BS id
  std::vector<int> donor_of;          // per SBS (id - n_mbs) -> MBS id, -1 if non-IAB
  std::vector<int> ue_count;          // per BS id (N_d for donors, N_cu / N_u for SBSs)
  std::vector<int> children_of_donor; // per MBS id
  int n_c_total = 0;                  // all IAB children in the graph
};

/// Max-received-power association for UEs (over all base stations) and IAB
/// children (over the MBSs).  Candidate links are evaluated boresight-
/// aligned, so the pattern gain is common and the order is decided by
/// transmit power, fading and path loss.  Ties go to the lower id.
Association associate(const LinkGeometry& geom, const DropDraws& draws,
                      const BackhaulGraph& graph, const RadioParams& rp);

/// Aggregate interference at a UE: every base station except the serving
/// one, each with a uniformly drawn transmit beam and the UE pointing at
/// its server.
double ue_interference_mw(int ue_idx, int serving_bs_id,
                          const LinkGeometry& geom, const DropDraws& draws,
                          const RadioParams& rp);

/// Aggregate interference on an IAB backhaul link: the other donors, with
/// the child pointing at its serving MBS.
double backhaul_interference_mw(int sbs_id, int serving_mbs_id,
                                const LinkGeometry& geom,
                                const DropDraws& draws, const RadioParams& rp);

enum class ServeKind { Donor, IabSbs, WiredSbs };

/// Rate of one UE.  `access_share_count` is N_d, N_cu or N_u depending on
/// the serving node; `backhaul_share_count` is the child count of the
/// serving SBS's donor (unused otherwise).  Zero-width shares give zero
/// rate rather than 0 * log(inf).
double ue_rate_bps(ServeKind kind, double sinr_access, double sinr_backhaul,
                   int access_share_count, int backhaul_share_count,
                   const RadioParams& rp);

/// Fraction of UEs at or above eta.  Throws on an empty rate list.
double service_coverage(std::span<const double> rates_bps, double eta_bps);

/// Network power: transmit power of every base station plus, per fiber SBS,
/// the transceiver pair and the per-km fiber loss along its path; FSO SBSs
/// add only the transceiver pair.
double total_power_w(const BackhaulGraph& graph, const RadioParams& rp,
                     const PowerParams& pp);

struct DropResult {
  std::vector<double> rates_bps;  // per UE idx
  double coverage = 0.0;
  double sum_rate_bps = 0.0;
  double ee_bps_per_w = 0.0;
};

/// EE = R_total / P_total; throws if p_total_w <= 0.
double energy_efficiency(const DropResult& drop, double p_total_w);

/// One Monte Carlo drop.  Deterministic given the drop substream; safe to
/// run in parallel across drops with distinct Rng states.
DropResult evaluate_drop(const LinkGeometry& geom, const BackhaulGraph& graph,
                         const RadioParams& rp, const ChannelParams& cp,
                         double p_total_w, Rng& rng, DropDraws& workspace);
DropResult evaluate_drop(const LinkGeometry& geom, const BackhaulGraph& graph,
                         const RadioParams& rp, const ChannelParams& cp,
                         double p_total_w, Rng& rng);

}  // namespace iabplan

#endif  // IABPLAN_RADIO_HPP
