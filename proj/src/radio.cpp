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

#include "radio.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace iabplan {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// Difference of two angles already in [-180, 180]; result in (-180, 180].
inline double angle_diff_deg(double a, double b) {
  double d = a - b;
  if (d > 180.0) d -= 360.0;
  if (d <= -180.0) d += 360.0;
  return d;
}

}  // namespace

void RadioParams::validate() const {
  if (!(total_bw_hz > 0.0)) {
    throw std::invalid_argument("radio.total_bw_hz must be > 0");
  }
  if (beta_split < 0.0 || beta_split > 1.0) {
    throw std::invalid_argument("radio.beta_split must be in [0, 1]");
  }
  if (!(eta_bps > 0.0)) {
    throw std::invalid_argument("radio.eta_bps must be > 0");
  }
}

void PowerParams::validate() const {
  if (fiber_loss_w_per_km < 0.0 || trx_power_w < 0.0 ||
      transceivers_per_fiber_link < 0) {
    throw std::invalid_argument("power: all fields must be >= 0");
  }
}

std::pair<double, double> split_bandwidth(const RadioParams& p) {
  double w_bh = p.beta_split * p.total_bw_hz;
  double w_ac = p.total_bw_hz - w_bh;
  // Recompute the smaller share as the complement of the larger one; that
  // subtraction is exact (Sterbenz), so the shares always sum to W exactly.
  if (w_bh < w_ac) {
    w_bh = p.total_bw_hz - w_ac;
  } else {
    w_ac = p.total_bw_hz - w_bh;
  }
  return {w_bh, w_ac};
}

LinkGeometry::LinkGeometry(const Scenario& s, const ChannelParams& cp) {
  cp.validate();
  n_mbs = s.count_of(NodeKind::Mbs);
  n_bs = n_mbs + s.count_of(NodeKind::Sbs);
  n_ue = s.count_of(NodeKind::Ue);
  g_main_lin = db_to_linear(cp.g_main_db);
  g_side_lin = db_to_linear(cp.g_side_db);
  half_beam_deg = cp.theta_hp_deg / 2.0;

  auto plinv = [&](double d, LinkState state) {
    const double clamped = std::max(d, cp.ref_distance_m);
    return db_to_linear(-path_loss_db(clamped, state, cp));
  };

  const std::size_t n_ue_pairs =
      static_cast<std::size_t>(n_ue) * static_cast<std::size_t>(n_bs);
  ue_plinv_los.resize(n_ue_pairs);
  ue_plinv_nlos.resize(n_ue_pairs);
  ue_plos.resize(n_ue_pairs);
  ue_ang_tx_deg.resize(n_ue_pairs);
  ue_ang_rx_deg.resize(n_ue_pairs);
  for (int u = 0; u < n_ue; ++u) {
    const Point& up = s.nodes[static_cast<std::size_t>(n_bs + u)].pos;
    for (int b = 0; b < n_bs; ++b) {
      const Point& bp = s.nodes[static_cast<std::size_t>(b)].pos;
      const std::size_t k = ue_pair(u, b);
      const double d = distance(up, bp);
      ue_plos[k] = los_probability(d);
      ue_plinv_los[k] = plinv(d, LinkState::Los);
      ue_plinv_nlos[k] = plinv(d, LinkState::Nlos);
      ue_ang_tx_deg[k] = std::atan2(up.y - bp.y, up.x - bp.x) * kRadToDeg;
      ue_ang_rx_deg[k] = std::atan2(bp.y - up.y, bp.x - up.x) * kRadToDeg;
    }
  }

  const std::size_t n_bh_pairs =
      static_cast<std::size_t>(n_bs - n_mbs) * static_cast<std::size_t>(n_mbs);
  bh_plinv_los.resize(n_bh_pairs);
  bh_plinv_nlos.resize(n_bh_pairs);
  bh_plos.resize(n_bh_pairs);
  bh_ang_tx_deg.resize(n_bh_pairs);
  bh_ang_rx_deg.resize(n_bh_pairs);
  for (int c = n_mbs; c < n_bs; ++c) {
    const Point& spb = s.nodes[static_cast<std::size_t>(c)].pos;
    for (int m = 0; m < n_mbs; ++m) {
      const Point& mp = s.nodes[static_cast<std::size_t>(m)].pos;
      const std::size_t k = bh_pair(c, m);
      const double d = distance(spb, mp);
      bh_plos[k] = los_probability(d);
      bh_plinv_los[k] = plinv(d, LinkState::Los);
      bh_plinv_nlos[k] = plinv(d, LinkState::Nlos);
      bh_ang_tx_deg[k] = std::atan2(spb.y - mp.y, spb.x - mp.x) * kRadToDeg;
      bh_ang_rx_deg[k] = std::atan2(mp.y - spb.y, mp.x - spb.x) * kRadToDeg;
    }
  }
}

void DropDraws::sample(const LinkGeometry& geom, Rng& rng) {
  beam_az_deg.resize(static_cast<std::size_t>(geom.n_bs));
  for (double& az : beam_az_deg) {
    az = rng.next_uniform(-180.0, 180.0);
  }
  ue_los.resize(geom.ue_plos.size());
  ue_fading.resize(geom.ue_plos.size());
  for (std::size_t k = 0; k < geom.ue_plos.size(); ++k) {
    ue_los[k] = rng.next_bernoulli(geom.ue_plos[k]) ? 1 : 0;
    ue_fading[k] = rng.next_exponential();
  }
  bh_los.resize(geom.bh_plos.size());
  bh_fading.resize(geom.bh_plos.size());
  for (std::size_t k = 0; k < geom.bh_plos.size(); ++k) {
    bh_los[k] = rng.next_bernoulli(geom.bh_plos[k]) ? 1 : 0;
    bh_fading[k] = rng.next_exponential();
  }
}

Association associate(const LinkGeometry& geom, const DropDraws& draws,
                      const BackhaulGraph& graph, const RadioParams& rp) {
  if (geom.n_bs == 0) {
    throw std::invalid_argument("associate: no base stations present");
  }
  const double p_mbs_mw = dbm_to_mw(rp.p_mbs_dbm);
  const double p_sbs_mw = dbm_to_mw(rp.p_sbs_dbm);

  Association assoc;
  assoc.serving_bs.resize(static_cast<std::size_t>(geom.n_ue));
  assoc.ue_count.assign(static_cast<std::size_t>(geom.n_bs), 0);
  assoc.donor_of.assign(static_cast<std::size_t>(geom.n_bs - geom.n_mbs), -1);
  assoc.children_of_donor.assign(static_cast<std::size_t>(geom.n_mbs), 0);
  assoc.n_c_total = static_cast<int>(graph.v_iab.size());

  for (int u = 0; u < geom.n_ue; ++u) {
    int best = -1;
    double best_rx = -1.0;
    for (int b = 0; b < geom.n_bs; ++b) {
      const std::size_t k = geom.ue_pair(u, b);
      const double plinv = draws.ue_los[k] ? geom.ue_plinv_los[k]
                                           : geom.ue_plinv_nlos[k];
      const double rx = (b < geom.n_mbs ? p_mbs_mw : p_sbs_mw) *
                        draws.ue_fading[k] * plinv;
      if (rx > best_rx) {  // strict: equal power keeps the lower id
        best_rx = rx;
        best = b;
      }
    }
    assoc.serving_bs[static_cast<std::size_t>(u)] = best;
    ++assoc.ue_count[static_cast<std::size_t>(best)];
  }

  if (!graph.v_iab.empty() && geom.n_mbs == 0) {
    throw std::invalid_argument("associate: IAB SBSs exist but no MBS donor");
  }
  for (int c : graph.v_iab) {
    int best = -1;
    double best_rx = -1.0;
    for (int m = 0; m < geom.n_mbs; ++m) {
      const std::size_t k = geom.bh_pair(c, m);
      const double plinv = draws.bh_los[k] ? geom.bh_plinv_los[k]
                                           : geom.bh_plinv_nlos[k];
      const double rx = p_mbs_mw * draws.bh_fading[k] * plinv;
      if (rx > best_rx) {
        best_rx = rx;
        best = m;
      }
    }
    assoc.donor_of[static_cast<std::size_t>(c - geom.n_mbs)] = best;
    ++assoc.children_of_donor[static_cast<std::size_t>(best)];
  }
  return assoc;
}

double ue_interference_mw(int ue_idx, int serving_bs_id,
                          const LinkGeometry& geom, const DropDraws& draws,
                          const RadioParams& rp) {
  const double p_mbs_mw = dbm_to_mw(rp.p_mbs_dbm);
  const double p_sbs_mw = dbm_to_mw(rp.p_sbs_dbm);
  const double boresight =
      geom.ue_ang_rx_deg[geom.ue_pair(ue_idx, serving_bs_id)];
  double total = 0.0;
  for (int b = 0; b < geom.n_bs; ++b) {
    if (b == serving_bs_id) continue;
    const std::size_t k = geom.ue_pair(ue_idx, b);
    const double plinv =
        draws.ue_los[k] ? geom.ue_plinv_los[k] : geom.ue_plinv_nlos[k];
    const double tx_off = angle_diff_deg(draws.beam_az_deg[static_cast<std::size_t>(b)],
                                         geom.ue_ang_tx_deg[k]);
    const double rx_off = angle_diff_deg(geom.ue_ang_rx_deg[k], boresight);
    const double gain =
        (std::fabs(tx_off) <= geom.half_beam_deg ? geom.g_main_lin
                                                 : geom.g_side_lin) *
        (std::fabs(rx_off) <= geom.half_beam_deg ? geom.g_main_lin
                                                 : geom.g_side_lin);
    total += (b < geom.n_mbs ? p_mbs_mw : p_sbs_mw) * draws.ue_fading[k] *
             gain * plinv;
  }
  return total;
}

double backhaul_interference_mw(int sbs_id, int serving_mbs_id,
                                const LinkGeometry& geom,
                                const DropDraws& draws,
                                const RadioParams& rp) {
  const double p_mbs_mw = dbm_to_mw(rp.p_mbs_dbm);
  const double boresight =
      geom.bh_ang_rx_deg[geom.bh_pair(sbs_id, serving_mbs_id)];
  double total = 0.0;
  for (int m = 0; m < geom.n_mbs; ++m) {
    if (m == serving_mbs_id) continue;
    const std::size_t k = geom.bh_pair(sbs_id, m);
    const double plinv =
        draws.bh_los[k] ? geom.bh_plinv_los[k] : geom.bh_plinv_nlos[k];
    const double tx_off = angle_diff_deg(draws.beam_az_deg[static_cast<std::size_t>(m)],
                                         geom.bh_ang_tx_deg[k]);
    const double rx_off = angle_diff_deg(geom.bh_ang_rx_deg[k], boresight);
    const double gain =
        (std::fabs(tx_off) <= geom.half_beam_deg ? geom.g_main_lin
                                                 : geom.g_side_lin) *
        (std::fabs(rx_off) <= geom.half_beam_deg ? geom.g_main_lin
                                                 : geom.g_side_lin);
    total += p_mbs_mw * draws.bh_fading[k] * gain * plinv;
  }
  return total;
}

double ue_rate_bps(ServeKind kind, double sinr_access, double sinr_backhaul,
                   int access_share_count, int backhaul_share_count,
                   const RadioParams& rp) {
  if (access_share_count < 1) {
    throw std::invalid_argument("ue_rate_bps: serving node must serve >= 1 UE");
  }
  const auto [w_bh, w_ac] = split_bandwidth(rp);
  auto share_rate = [](double width_hz, int share, double sinr) {
    if (width_hz <= 0.0) return 0.0;
    return width_hz / static_cast<double>(share) * std::log2(1.0 + sinr);
  };
  switch (kind) {
    case ServeKind::Donor:
      return share_rate(w_ac, access_share_count, sinr_access);
    case ServeKind::IabSbs: {
      if (backhaul_share_count < 1) {
        throw std::invalid_argument("ue_rate_bps: IAB path needs children >= 1");
      }
      const double access = share_rate(w_ac, access_share_count, sinr_access);
      // The child's backhaul share carries the traffic of all of its UEs,
      // so each of the N_cu UEs sees its per-UE slice of that link.
      const double backhaul =
          share_rate(w_bh, backhaul_share_count, sinr_backhaul) /
          static_cast<double>(access_share_count);
      return std::min(access, backhaul);
    }
    case ServeKind::WiredSbs:
      return share_rate(rp.total_bw_hz, access_share_count, sinr_access);
  }
  return 0.0;
}

double service_coverage(std::span<const double> rates_bps, double eta_bps) {
  if (rates_bps.empty()) {
    throw std::invalid_argument("service_coverage: empty UE set");
  }
  std::size_t covered = 0;
  for (double r : rates_bps) {
    if (r >= eta_bps) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(rates_bps.size());
}

double total_power_w(const BackhaulGraph& graph, const RadioParams& rp,
                     const PowerParams& pp) {
  pp.validate();
  const double p_mbs_w = dbm_to_w(rp.p_mbs_dbm);
  const double p_sbs_w = dbm_to_w(rp.p_sbs_dbm);
  double total = 0.0;
  for (int id = 0; id < static_cast<int>(graph.stations.size()); ++id) {
    total += graph.is_mbs(id) ? p_mbs_w : p_sbs_w;
  }
  const double trx_pair =
      static_cast<double>(pp.transceivers_per_fiber_link) * pp.trx_power_w;
  for (int id : graph.v_fib) {
    total += trx_pair +
             pp.fiber_loss_w_per_km * graph.fiber_path_len_m.at(id) / 1000.0;
  }
  total += trx_pair * static_cast<double>(graph.v_fso.size());
  return total;
}

double energy_efficiency(const DropResult& drop, double p_total_w) {
  if (!(p_total_w > 0.0)) {
    throw std::invalid_argument("energy_efficiency: total power must be > 0");
  }
  return drop.sum_rate_bps / p_total_w;
}

DropResult evaluate_drop(const LinkGeometry& geom, const BackhaulGraph& graph,
                         const RadioParams& rp, const ChannelParams& cp,
                         double p_total_w, Rng& rng, DropDraws& workspace) {
  rp.validate();
  workspace.sample(geom, rng);
  const Association assoc = associate(geom, workspace, graph, rp);

  const double p_mbs_mw = dbm_to_mw(rp.p_mbs_dbm);
  const double p_sbs_mw = dbm_to_mw(rp.p_sbs_dbm);
  const double g_serving = geom.g_main_lin * geom.g_main_lin;
  const auto [w_bh, w_ac] = split_bandwidth(rp);
  const double noise_ac_mw = noise_power_mw(w_ac, cp);
  const double noise_bh_mw = noise_power_mw(w_bh, cp);
  const double noise_full_mw = noise_power_mw(rp.total_bw_hz, cp);

  // Backhaul SINR per IAB child.
  std::vector<double> backhaul_sinr(static_cast<std::size_t>(geom.n_bs - geom.n_mbs), 0.0);
  for (int c : graph.v_iab) {
    const int donor = assoc.donor_of[static_cast<std::size_t>(c - geom.n_mbs)];
    const std::size_t k = geom.bh_pair(c, donor);
    const double plinv = workspace.bh_los[k] ? geom.bh_plinv_los[k]
                                             : geom.bh_plinv_nlos[k];
    const double rx = p_mbs_mw * workspace.bh_fading[k] * g_serving * plinv;
    const double interference =
        backhaul_interference_mw(c, donor, geom, workspace, rp);
    const double denom = interference + noise_bh_mw;
    backhaul_sinr[static_cast<std::size_t>(c - geom.n_mbs)] =
        denom > 0.0 ? rx / denom : 0.0;
  }

  DropResult result;
  result.rates_bps.resize(static_cast<std::size_t>(geom.n_ue));
  double covered = 0.0;
  double sum = 0.0;
  for (int u = 0; u < geom.n_ue; ++u) {
    const int b = assoc.serving_bs[static_cast<std::size_t>(u)];
    const std::size_t k = geom.ue_pair(u, b);
    const double plinv = workspace.ue_los[k] ? geom.ue_plinv_los[k]
                                             : geom.ue_plinv_nlos[k];
    const double rx = (b < geom.n_mbs ? p_mbs_mw : p_sbs_mw) *
                      workspace.ue_fading[k] * g_serving * plinv;
    const double interference = ue_interference_mw(u, b, geom, workspace, rp);

    ServeKind kind;
    double noise_mw;
    double sinr_bh = 0.0;
    int access_share = assoc.ue_count[static_cast<std::size_t>(b)];
    int bh_share = 1;
    if (b < geom.n_mbs) {
      kind = ServeKind::Donor;
      noise_mw = noise_ac_mw;
    } else if (graph.v_iab.count(b)) {
      kind = ServeKind::IabSbs;
      noise_mw = noise_ac_mw;
      sinr_bh = backhaul_sinr[static_cast<std::size_t>(b - geom.n_mbs)];
      const int donor = assoc.donor_of[static_cast<std::size_t>(b - geom.n_mbs)];
      bh_share = assoc.children_of_donor[static_cast<std::size_t>(donor)];
    } else {
      kind = ServeKind::WiredSbs;
      noise_mw = noise_full_mw;
    }
    const double denom = interference + noise_mw;
    const double sinr_u = denom > 0.0 ? rx / denom : 0.0;
    const double rate = ue_rate_bps(kind, sinr_u, sinr_bh, access_share,
                                    bh_share, rp);
    result.rates_bps[static_cast<std::size_t>(u)] = rate;
    sum += rate;
    if (rate >= rp.eta_bps) covered += 1.0;
  }
  result.sum_rate_bps = sum;
  result.coverage =
      geom.n_ue > 0 ? covered / static_cast<double>(geom.n_ue) : 0.0;
  result.ee_bps_per_w = energy_efficiency(result, p_total_w);
  return result;
}

DropResult evaluate_drop(const LinkGeometry& geom, const BackhaulGraph& graph,
                         const RadioParams& rp, const ChannelParams& cp,
                         double p_total_w, Rng& rng) {
  DropDraws workspace;
  return evaluate_drop(geom, graph, rp, cp, p_total_w, rng, workspace);
}

}  // namespace iabplan
