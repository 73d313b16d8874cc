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

#ifndef IABPLAN_SCENARIO_HPP
#define IABPLAN_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rng.hpp"

namespace iabplan {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

/// Euclidean distance in meters.
double distance(const Point& a, const Point& b);

/// Axis-aligned deployment rectangle anchored at the origin.
struct Region {
  double width = 0.0;   // meters
  double height = 0.0;  // meters
  bool operator==(const Region&) const = default;
  bool valid() const { return width > 0.0 && height > 0.0; }
  bool contains(const Point& p) const {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
};

enum class NodeKind { Mbs, Sbs, Ue };

const char* to_string(NodeKind kind);
NodeKind node_kind_from_string(const std::string& text);  // throws on unknown

struct Node {
  int id = 0;
  NodeKind kind = NodeKind::Ue;
  Point pos;
  bool operator==(const Node&) const = default;
};

/// A sampled layout.  Node ids are dense 0..n-1 with MBSs first, then SBSs,
/// then UEs, so base stations occupy ids [0, n_mbs + n_sbs).
struct Scenario {
  Region region;
  std::uint64_t seed = 0;
  std::vector<Node> nodes;

  bool operator==(const Scenario&) const = default;

  int count_of(NodeKind kind) const;
  std::vector<int> ids_of(NodeKind kind) const;
};

/// Fixed-count uniform sampling over the region (binomial point process).
/// Pure function of its arguments: identical inputs give a bit-identical
/// Scenario.  Positions are drawn from per-kind substreams of `seed`, so
/// changing only n_ue leaves the base-station layout untouched and extends
/// the UE list in place.
Scenario sample_scenario(const Region& region, int n_mbs, int n_sbs, int n_ue,
                         std::uint64_t seed);

/// JSON round trip.  load_scenario validates region, id density, kinds and
/// containment and throws std::runtime_error on any violation.
std::string save_scenario(const Scenario& s);
Scenario load_scenario(const std::string& json_text);

}  // namespace iabplan

#endif  // IABPLAN_SCENARIO_HPP
