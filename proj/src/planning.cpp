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

#include "planning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace iabplan {

namespace {

// Neumaier-compensated sum; keeps cost bookkeeping well below the 1e-9
// tolerance used by incremental-vs-recomputed checks.
class StableSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::pair<int, int> edge_key(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

}  // namespace

void CostParams::validate() const {
  if (beta_dig < 0.0 || beta_fiber < 0.0 || beta_trx < 0.0 || beta_fso < 0.0) {
    throw std::invalid_argument("cost: all coefficients must be >= 0");
  }
}

bool BackhaulGraph::has_edge(int u, int v) const {
  return edges.count(edge_key(u, v)) > 0;
}

double BackhaulGraph::edge_length(int u, int v) const {
  return edges.at(edge_key(u, v));
}

void BackhaulGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("add_edge: self loop");
  edges.emplace(edge_key(u, v), distance(station(u).pos, station(v).pos));
}

int BackhaulGraph::ring_edge_count() const {
  const int m = static_cast<int>(ring.size());
  if (m >= 3) return m;
  if (m == 2) return 1;
  return 0;
}

double BackhaulGraph::ring_length_m() const {
  const int m = static_cast<int>(ring.size());
  StableSum len;
  for (int i = 0; i < ring_edge_count(); ++i) {
    len.add(edge_length(ring[static_cast<std::size_t>(i)],
                        ring[static_cast<std::size_t>((i + 1) % m)]));
  }
  return len.value();
}

void check_graph_invariants(const BackhaulGraph& g) {
  const int n = static_cast<int>(g.stations.size());
  for (int id = 0; id < n; ++id) {
    if (g.stations[static_cast<std::size_t>(id)].id != id) {
      throw std::logic_error("graph: station ids must be dense and ordered");
    }
    const bool mbs = g.stations[static_cast<std::size_t>(id)].kind == NodeKind::Mbs;
    if (mbs != g.is_mbs(id)) {
      throw std::logic_error("graph: MBSs must occupy the leading ids");
    }
  }
  int partitioned = 0;
  for (int id = g.n_mbs; id < n; ++id) {
    const int in = static_cast<int>(g.v_iab.count(id)) +
                   static_cast<int>(g.v_fib.count(id)) +
                   static_cast<int>(g.v_fso.count(id));
    if (in != 1) {
      throw std::logic_error("graph: every SBS must be in exactly one partition");
    }
    ++partitioned;
  }
  if (static_cast<int>(g.v_iab.size() + g.v_fib.size() + g.v_fso.size()) !=
      partitioned) {
    throw std::logic_error("graph: partition contains a non-SBS id");
  }
  for (int id : g.v_fib) {
    if (!g.fiber_path_len_m.count(id)) {
      throw std::logic_error("graph: fiber SBS without a recorded path length");
    }
  }
  for (const auto& [key, len] : g.edges) {
    if (key.first < 0 || key.second >= n || key.first >= key.second) {
      throw std::logic_error("graph: malformed edge key");
    }
    (void)len;
  }
  for (const FsoLink& link : g.fso_links) {
    if (!g.v_fso.count(link.sbs)) {
      throw std::logic_error("graph: FSO link for a non-FSO SBS");
    }
  }
}

BackhaulGraph build_mbs_ring(const Scenario& s) {
  BackhaulGraph g;
  for (const Node& node : s.nodes) {
    if (node.kind == NodeKind::Mbs || node.kind == NodeKind::Sbs) {
      if (node.id != static_cast<int>(g.stations.size())) {
        throw std::invalid_argument(
            "build_mbs_ring: base stations must precede UEs with dense ids");
      }
      g.stations.push_back(node);
      if (node.kind == NodeKind::Mbs) {
        ++g.n_mbs;
      } else {
        g.v_iab.insert(node.id);
      }
    }
  }
  // Ring order: angle around the MBS centroid, ties by id.  Degenerate
  // (collinear) layouts still get a defined order this way.
  if (g.n_mbs > 0) {
    double cx = 0.0, cy = 0.0;
    for (int id = 0; id < g.n_mbs; ++id) {
      cx += g.station(id).pos.x;
      cy += g.station(id).pos.y;
    }
    cx /= g.n_mbs;
    cy /= g.n_mbs;
    std::vector<int> order(static_cast<std::size_t>(g.n_mbs));
    for (int id = 0; id < g.n_mbs; ++id) order[static_cast<std::size_t>(id)] = id;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double aa = std::atan2(g.station(a).pos.y - cy, g.station(a).pos.x - cx);
      const double ab = std::atan2(g.station(b).pos.y - cy, g.station(b).pos.x - cx);
      if (aa != ab) return aa < ab;
      return a < b;
    });
    g.ring = order;
    const int m = g.n_mbs;
    if (m == 2) {
      g.add_edge(g.ring[0], g.ring[1]);
    } else if (m >= 3) {
      for (int i = 0; i < m; ++i) {
        g.add_edge(g.ring[static_cast<std::size_t>(i)],
                   g.ring[static_cast<std::size_t>((i + 1) % m)]);
      }
    }
  }
  return g;
}

BackhaulGraph plan_connected_topology(const BackhaulGraph& ring_graph,
                                      std::span<const int> order) {
  BackhaulGraph g = ring_graph;
  const int n = static_cast<int>(g.stations.size());
  if (n == 0) {
    throw std::invalid_argument("plan_connected_topology: empty vertex set");
  }
  std::vector<char> isolated(static_cast<std::size_t>(n), 0);
  int isolated_count = 0;
  for (int id = g.n_mbs; id < n; ++id) {
    isolated[static_cast<std::size_t>(id)] = 1;
    ++isolated_count;
  }
  if (isolated_count > 0 && g.n_mbs == 0) {
    throw std::invalid_argument(
        "plan_connected_topology: no MBS to anchor the topology");
  }
  if (static_cast<int>(order.size()) != isolated_count) {
    throw std::invalid_argument(
        "plan_connected_topology: order must cover every isolated SBS");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < g.n_mbs || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument(
          "plan_connected_topology: order must be a permutation of the SBSs");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int v : order) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int w = 0; w < n; ++w) {
      if (isolated[static_cast<std::size_t>(w)]) continue;
      const double d = distance(g.station(v).pos, g.station(w).pos);
      if (d < best_d) {
        best_d = d;
        best = w;
      }
    }
    g.add_edge(v, best);
    isolated[static_cast<std::size_t>(v)] = 0;
  }
  return g;
}

BackhaulGraph plan_connected_topology(const BackhaulGraph& ring_graph,
                                      Rng& order_rng) {
  std::vector<int> order;
  for (int id = ring_graph.n_mbs; id < static_cast<int>(ring_graph.stations.size()); ++id) {
    order.push_back(id);
  }
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(order_rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }
  return plan_connected_topology(ring_graph, order);
}

DonorPath shortest_path_to_donor(const BackhaulGraph& design, int sbs_id) {
  const int n = static_cast<int>(design.stations.size());
  if (sbs_id < 0 || sbs_id >= n) {
    throw std::invalid_argument("shortest_path_to_donor: unknown vertex");
  }
  std::vector<std::vector<std::pair<int, double>>> adjacency(
      static_cast<std::size_t>(n));
  for (const auto& [key, len] : design.edges) {
    adjacency[static_cast<std::size_t>(key.first)].emplace_back(key.second, len);
    adjacency[static_cast<std::size_t>(key.second)].emplace_back(key.first, len);
  }

  // Dijkstra keyed by (distance, vertex-id sequence) so equal-length paths
  // resolve to the lexicographically smallest sequence.
  struct Label {
    double dist;
    std::vector<int> path;
  };
  auto worse = [](const Label& a, const Label& b) {
    if (a.dist != b.dist) return a.dist > b.dist;
    return a.path > b.path;
  };
  std::priority_queue<Label, std::vector<Label>, decltype(worse)> queue(worse);
  std::vector<char> settled(static_cast<std::size_t>(n), 0);
  queue.push({0.0, {sbs_id}});
  while (!queue.empty()) {
    Label label = queue.top();
    queue.pop();
    const int v = label.path.back();
    if (settled[static_cast<std::size_t>(v)]) continue;
    settled[static_cast<std::size_t>(v)] = 1;
    if (design.is_mbs(v)) {
      return DonorPath{std::move(label.path), label.dist};
    }
    for (const auto& [nb, len] : adjacency[static_cast<std::size_t>(v)]) {
      if (settled[static_cast<std::size_t>(nb)]) continue;
      Label next{label.dist + len, label.path};
      next.path.push_back(nb);
      queue.push(std::move(next));
    }
  }
  throw std::runtime_error(
      "shortest_path_to_donor: no MBS reachable from vertex " +
      std::to_string(sbs_id));
}

std::pair<std::vector<std::pair<int, int>>, double> step_cost(
    const BackhaulGraph& gamma, const DonorPath& path, const CostParams& cp) {
  std::vector<std::pair<int, int>> new_edges;
  StableSum new_len;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const int u = path.vertices[i];
    const int v = path.vertices[i + 1];
    if (!gamma.has_edge(u, v)) {
      new_edges.push_back(edge_key(u, v));
      new_len.add(distance(gamma.station(u).pos, gamma.station(v).pos));
    }
  }
  const double cost = cp.beta_dig * new_len.value() +
                      cp.beta_fiber * path.length_m + 2.0 * cp.beta_trx;
  return {std::move(new_edges), cost};
}

double inverse_separation(const BackhaulGraph& gamma, int candidate_id) {
  const Point& p = gamma.station(candidate_id).pos;
  StableSum sum;
  auto accumulate = [&](int id) -> bool {
    const double d = distance(p, gamma.station(id).pos);
    if (d == 0.0) return false;
    sum.add(1.0 / d);
    return true;
  };
  for (int id = 0; id < gamma.n_mbs; ++id) {
    if (!accumulate(id)) return std::numeric_limits<double>::infinity();
  }
  for (int id : gamma.v_fib) {
    if (!accumulate(id)) return std::numeric_limits<double>::infinity();
  }
  return sum.value();
}

namespace {

void apply_step(BackhaulGraph& g, const PlanStep& step) {
  for (const auto& [u, v] : step.new_edges) {
    g.add_edge(u, v);
  }
  g.v_iab.erase(step.chosen);
  g.v_fib.insert(step.chosen);
  g.fiber_path_len_m[step.chosen] = step.path_len_m;
}

std::unordered_map<int, DonorPath> design_paths(const BackhaulGraph& design,
                                                const std::set<int>& candidates) {
  std::unordered_map<int, DonorPath> paths;
  paths.reserve(candidates.size());
  for (int v : candidates) {
    paths.emplace(v, shortest_path_to_donor(design, v));
  }
  return paths;
}

// Min-max over the finite entries; ties collapse to 0, +inf stays +inf.
std::vector<double> min_max_normalize(const std::vector<double>& values) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (!std::isinf(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  std::vector<double> out(values.size(), 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::isinf(values[i])) {
      out[i] = values[i];
    } else if (hi > lo) {
      out[i] = (values[i] - lo) / (hi - lo);
    }
  }
  return out;
}

}  // namespace

PlanResult fbcp(const BackhaulGraph& gamma, const BackhaulGraph& design, int n,
                double alpha, const CostParams& cp) {
  cp.validate();
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("fbcp: alpha must be in [0, 1]");
  }
  if (n < 0 || n > static_cast<int>(gamma.v_iab.size())) {
    throw std::invalid_argument("fbcp: n exceeds the number of IAB SBSs");
  }
  PlanResult result{gamma, {}};
  BackhaulGraph& g = result.graph;
  const auto paths = design_paths(design, g.v_iab);

  for (int i = 0; i < n; ++i) {
    const std::vector<int> candidates(g.v_iab.begin(), g.v_iab.end());
    std::vector<double> cost(candidates.size());
    std::vector<double> sep(candidates.size());
    std::vector<std::vector<std::pair<int, int>>> new_edges(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      auto [edges, c] = step_cost(g, paths.at(candidates[k]), cp);
      new_edges[k] = std::move(edges);
      cost[k] = c;
      sep[k] = inverse_separation(g, candidates[k]);
    }
    const std::vector<double> cost_n = min_max_normalize(cost);
    const std::vector<double> sep_n = min_max_normalize(sep);
    std::size_t best = 0;
    double best_weight = std::numeric_limits<double>::infinity();
    std::vector<double> weight(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      double w;
      if (alpha == 0.0) {
        w = cost_n[k];  // avoid 0 * inf when a candidate is coincident
      } else if (alpha == 1.0) {
        w = sep_n[k];
      } else {
        w = alpha * sep_n[k] + (1.0 - alpha) * cost_n[k];
      }
      weight[k] = w;
      if (w < best_weight) {  // strict: ties keep the lowest id
        best_weight = w;
        best = k;
      }
    }
    PlanStep step;
    step.chosen = candidates[best];
    step.new_edges = std::move(new_edges[best]);
    step.path_len_m = paths.at(step.chosen).length_m;
    step.step_cost = cost[best];
    step.sep_raw = sep[best];
    step.weight = weight[best];
    apply_step(g, step);
    result.steps.push_back(std::move(step));
  }
  return result;
}

PlanResult random_placement(const BackhaulGraph& gamma,
                            const BackhaulGraph& design, int n, Rng& rng,
                            const CostParams& cp) {
  cp.validate();
  if (n < 0 || n > static_cast<int>(gamma.v_iab.size())) {
    throw std::invalid_argument(
        "random_placement: n exceeds the number of IAB SBSs");
  }
  PlanResult result{gamma, {}};
  BackhaulGraph& g = result.graph;
  const auto paths = design_paths(design, g.v_iab);

  std::vector<int> order(g.v_iab.begin(), g.v_iab.end());
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }
  for (int i = 0; i < n; ++i) {
    const int chosen = order[static_cast<std::size_t>(i)];
    auto [edges, c] = step_cost(g, paths.at(chosen), cp);
    PlanStep step;
    step.chosen = chosen;
    step.new_edges = std::move(edges);
    step.path_len_m = paths.at(chosen).length_m;
    step.step_cost = c;
    step.sep_raw = inverse_separation(g, chosen);
    step.weight = 0.0;
    apply_step(g, step);
    result.steps.push_back(std::move(step));
  }
  return result;
}

BackhaulGraph apply_plan_prefix(const BackhaulGraph& ring_graph,
                                std::span<const PlanStep> steps, int n) {
  if (n < 0 || n > static_cast<int>(steps.size())) {
    throw std::invalid_argument("apply_plan_prefix: bad prefix length");
  }
  BackhaulGraph g = ring_graph;
  for (int i = 0; i < n; ++i) {
    apply_step(g, steps[static_cast<std::size_t>(i)]);
  }
  return g;
}

BackhaulGraph assign_fso(const BackhaulGraph& gamma, int m,
                         std::span<const int> ranking) {
  if (m < 0 || m > static_cast<int>(gamma.v_iab.size()) ||
      m > static_cast<int>(ranking.size())) {
    throw std::invalid_argument("assign_fso: m exceeds the available ranking");
  }
  BackhaulGraph g = gamma;
  for (int i = 0; i < m; ++i) {
    const int v = ranking[static_cast<std::size_t>(i)];
    if (!g.v_iab.count(v)) {
      throw std::invalid_argument("assign_fso: ranked SBS is not IAB-backhauled");
    }
    int target = -1;
    double best_d = std::numeric_limits<double>::infinity();
    auto consider = [&](int id) {
      const double d = distance(g.station(v).pos, g.station(id).pos);
      if (d < best_d) {
        best_d = d;
        target = id;
      }
    };
    for (int id = 0; id < g.n_mbs; ++id) consider(id);
    for (int id : g.v_fib) consider(id);
    if (target < 0) {
      throw std::runtime_error("assign_fso: no fiber-connected target exists");
    }
    g.fso_links.push_back(FsoLink{v, target, best_d});
    g.v_iab.erase(v);
    g.v_fso.insert(v);
  }
  return g;
}

double total_cost(const BackhaulGraph& gamma, const CostParams& cp) {
  StableSum trench;
  for (const auto& [key, len] : gamma.edges) {
    (void)key;
    trench.add(len);
  }
  StableSum fiber;
  const int m = static_cast<int>(gamma.ring.size());
  for (int i = 0; i < gamma.ring_edge_count(); ++i) {
    fiber.add(gamma.edge_length(gamma.ring[static_cast<std::size_t>(i)],
                                gamma.ring[static_cast<std::size_t>((i + 1) % m)]));
  }
  for (const auto& [id, len] : gamma.fiber_path_len_m) {
    (void)id;
    fiber.add(len);
  }
  const double n_links =
      static_cast<double>(gamma.ring_edge_count() + static_cast<int>(gamma.v_fib.size()));
  return cp.beta_dig * trench.value() + cp.beta_fiber * fiber.value() +
         2.0 * cp.beta_trx * n_links +
         2.0 * cp.beta_fso * static_cast<double>(gamma.fso_links.size());
}

std::string export_plan_json(const BackhaulGraph& final_graph,
                             const BackhaulGraph& design,
                             std::span<const PlanStep> steps,
                             const CostParams& cp) {
  nlohmann::json doc;
  doc["ring"] = final_graph.ring;
  nlohmann::json design_edges = nlohmann::json::array();
  for (const auto& [key, len] : design.edges) {
    design_edges.push_back({key.first, key.second, len});
  }
  doc["design_edges"] = std::move(design_edges);
  const double base = cp.beta_dig * final_graph.ring_length_m() +
                      cp.beta_fiber * final_graph.ring_length_m() +
                      2.0 * cp.beta_trx * final_graph.ring_edge_count();
  nlohmann::json step_rows = nlohmann::json::array();
  double cum = base;
  int index = 1;
  for (const PlanStep& step : steps) {
    cum += step.step_cost;
    step_rows.push_back({{"n", index++},
                         {"chosen", step.chosen},
                         {"cost", step.step_cost},
                         {"cum_cost", cum}});
  }
  doc["steps"] = std::move(step_rows);
  nlohmann::json fso = nlohmann::json::array();
  for (const FsoLink& link : final_graph.fso_links) {
    fso.push_back({{"sbs", link.sbs}, {"target", link.target}, {"len", link.length_m}});
  }
  doc["fso"] = std::move(fso);
  return doc.dump(2) + "\n";
}

}  // namespace iabplan
