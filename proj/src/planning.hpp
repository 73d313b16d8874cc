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

#ifndef IABPLAN_PLANNING_HPP
#define IABPLAN_PLANNING_HPP

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rng.hpp"
#include "scenario.hpp"

namespace iabplan {

/// Deployment cost constants, normalized to the cost of one 10G transceiver.
struct CostParams {
  double beta_dig = 2.4;      // trenching, units per meter
  double beta_fiber = 0.006;  // fiber, units per meter
  double beta_trx = 1.0;      // transceiver, units
  double beta_fso = 50.0;     // FSO transceiver cost ratio, units

  void validate() const;  // throws std::invalid_argument
};

struct FsoLink {
  int sbs = -1;
  int target = -1;
  double length_m = 0.0;
  bool operator==(const FsoLink&) const = default;
};

/// Backhaul topology over the base stations of one scenario.  `edges` holds
/// the dug trenches (the MBS ring plus whatever fiber placement added);
/// every SBS is in exactly one of v_iab / v_fib / v_fso.
struct BackhaulGraph {
  std::vector<Node> stations;  // index == id; MBSs first, then SBSs
  int n_mbs = 0;
  std::vector<int> ring;  // MBS ids in ring order

  std::map<std::pair<int, int>, double> edges;  // key (min id, max id) -> m
  std::set<int> v_iab, v_fib, v_fso;
  std::vector<FsoLink> fso_links;
  std::map<int, double> fiber_path_len_m;  // per v_fib member: l(p*)

  const Node& station(int id) const { return stations.at(static_cast<std::size_t>(id)); }
  bool is_mbs(int id) const { return id < n_mbs; }
  bool has_edge(int u, int v) const;
  double edge_length(int u, int v) const;
  void add_edge(int u, int v);
  int ring_edge_count() const;
  double ring_length_m() const;
};

/// Throws std::logic_error if the partition or bookkeeping is inconsistent.
void check_graph_invariants(const BackhaulGraph& g);

/// Ring over the MBSs (angular order around the centroid) with every SBS
/// isolated and assigned to v_iab.  One or two MBSs degenerate to a single
/// vertex or a single edge.
BackhaulGraph build_mbs_ring(const Scenario& s);

/// Long-term reference topology: repeatedly connect an isolated SBS to its
/// nearest already-connected station.  The explicit-order overload exists
/// for tests; the Rng overload draws the processing order from `order_rng`.
BackhaulGraph plan_connected_topology(const BackhaulGraph& ring_graph,
                                      std::span<const int> order);
BackhaulGraph plan_connected_topology(const BackhaulGraph& ring_graph,
                                      Rng& order_rng);

struct DonorPath {
  std::vector<int> vertices;  // starts at the SBS, ends at an MBS
  double length_m = 0.0;
};

/// Minimum-length path from `sbs_id` to any MBS in the design graph.  Ties
/// are broken by the lexicographically smallest vertex-id sequence.  Throws
/// if no MBS is reachable.
DonorPath shortest_path_to_donor(const BackhaulGraph& design, int sbs_id);

/// Edges of `path` missing from `gamma` plus the cost of adding them:
/// beta_dig * l(E') + beta_fiber * l(p*) + 2 * beta_trx.
std::pair<std::vector<std::pair<int, int>>, double> step_cost(
    const BackhaulGraph& gamma, const DonorPath& path, const CostParams& cp);

/// Sum of inverse distances from `candidate_id` to every fiber-connected SBS
/// and every MBS.  A coincident reference makes the result +infinity.
double inverse_separation(const BackhaulGraph& gamma, int candidate_id);

struct PlanStep {
  int chosen = -1;
  std::vector<std::pair<int, int>> new_edges;
  double path_len_m = 0.0;
  double step_cost = 0.0;
  double sep_raw = 0.0;
  double weight = 0.0;
};

struct PlanResult {
  BackhaulGraph graph;
  std::vector<PlanStep> steps;
};

/// Greedy fiber-connection placement: each iteration scores every IAB SBS by
/// alpha * sep + (1 - alpha) * cost (both min-max normalized over the
/// candidate set) and connects the arg-min along its design-graph path.
PlanResult fbcp(const BackhaulGraph& gamma, const BackhaulGraph& design, int n,
                double alpha, const CostParams& cp);

/// Baseline: n SBSs drawn uniformly without replacement, connected in draw
/// order with the same step accounting as fbcp.
PlanResult random_placement(const BackhaulGraph& gamma,
                            const BackhaulGraph& design, int n, Rng& rng,
                            const CostParams& cp);

/// Replay the first n recorded steps onto a copy of `ring_graph`.
BackhaulGraph apply_plan_prefix(const BackhaulGraph& ring_graph,
                                std::span<const PlanStep> steps, int n);

/// Move the first m entries of `ranking` from v_iab to v_fso, linking each to
/// its nearest member of v_fib or the MBS set.
BackhaulGraph assign_fso(const BackhaulGraph& gamma, int m,
                         std::span<const int> ranking);

/// Full deployment price: trenching over unique edges, fiber along the ring
/// and along every SBS path, two transceivers per fiber link and 2*beta_fso
/// per FSO link.  Summation order is canonical, so equal graphs price
/// bit-identically.
double total_cost(const BackhaulGraph& gamma, const CostParams& cp);

/// Plan document used by the CLI `plan` subcommand.
std::string export_plan_json(const BackhaulGraph& final_graph,
                             const BackhaulGraph& design,
                             std::span<const PlanStep> steps,
                             const CostParams& cp);

}  // namespace iabplan

#endif  // IABPLAN_PLANNING_HPP
