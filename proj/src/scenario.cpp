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

#include "scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace iabplan {

using nlohmann::json;

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Mbs:
      return "mbs";
    case NodeKind::Sbs:
      return "sbs";
    case NodeKind::Ue:
      return "ue";
  }
  return "?";
}

NodeKind node_kind_from_string(const std::string& text) {
  if (text == "mbs") return NodeKind::Mbs;
  if (text == "sbs") return NodeKind::Sbs;
  if (text == "ue") return NodeKind::Ue;
  throw std::runtime_error("unknown node kind: " + text);
}

int Scenario::count_of(NodeKind kind) const {
  int n = 0;
  for (const Node& node : nodes) {
    if (node.kind == kind) ++n;
  }
  return n;
}

std::vector<int> Scenario::ids_of(NodeKind kind) const {
  std::vector<int> ids;
  for (const Node& node : nodes) {
    if (node.kind == kind) ids.push_back(node.id);
  }
  return ids;
}

namespace {

void sample_kind(std::vector<Node>& nodes, const Region& region, int count,
                 NodeKind kind, std::uint64_t stream_seed) {
  Rng rng(stream_seed);
  for (int i = 0; i < count; ++i) {
    Node node;
    node.id = static_cast<int>(nodes.size());
    node.kind = kind;
    node.pos.x = rng.next_uniform(0.0, region.width);
    node.pos.y = rng.next_uniform(0.0, region.height);
    nodes.push_back(node);
  }
}

}  // namespace

Scenario sample_scenario(const Region& region, int n_mbs, int n_sbs, int n_ue,
                         std::uint64_t seed) {
  if (!region.valid()) {
    throw std::invalid_argument("sample_scenario: region must have positive area");
  }
  if (n_mbs < 0 || n_sbs < 0 || n_ue < 0) {
    throw std::invalid_argument("sample_scenario: counts must be >= 0");
  }
  Scenario s;
  s.region = region;
  s.seed = seed;
  s.nodes.reserve(static_cast<std::size_t>(n_mbs + n_sbs + n_ue));
  sample_kind(s.nodes, region, n_mbs, NodeKind::Mbs,
              Rng::derive(seed, stream::kMbsPositions, 0));
  sample_kind(s.nodes, region, n_sbs, NodeKind::Sbs,
              Rng::derive(seed, stream::kSbsPositions, 0));
  sample_kind(s.nodes, region, n_ue, NodeKind::Ue,
              Rng::derive(seed, stream::kUePositions, 0));
  return s;
}

std::string save_scenario(const Scenario& s) {
  json doc;
  doc["region"] = {{"width", s.region.width}, {"height", s.region.height}};
  doc["seed"] = s.seed;
  json nodes = json::array();
  for (const Node& node : s.nodes) {
    nodes.push_back({{"id", node.id},
                     {"kind", to_string(node.kind)},
                     {"x", node.pos.x},
                     {"y", node.pos.y}});
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

Scenario load_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("scenario parse error: ") + e.what());
  }
  Scenario s;
  try {
    s.region.width = doc.at("region").at("width").get<double>();
    s.region.height = doc.at("region").at("height").get<double>();
    s.seed = doc.at("seed").get<std::uint64_t>();
    for (const json& item : doc.at("nodes")) {
      Node node;
      node.id = item.at("id").get<int>();
      node.kind = node_kind_from_string(item.at("kind").get<std::string>());
      node.pos.x = item.at("x").get<double>();
      node.pos.y = item.at("y").get<double>();
      s.nodes.push_back(node);
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("scenario schema error: ") + e.what());
  }
  if (!s.region.valid()) {
    throw std::runtime_error("scenario: region must have positive area");
  }
  std::unordered_set<int> seen;
  for (const Node& node : s.nodes) {
    if (!std::isfinite(node.pos.x) || !std::isfinite(node.pos.y)) {
      throw std::runtime_error("scenario: non-finite coordinate for node " +
                               std::to_string(node.id));
    }
    if (!s.region.contains(node.pos)) {
      throw std::runtime_error("scenario: node " + std::to_string(node.id) +
                               " lies outside the region");
    }
    if (!seen.insert(node.id).second) {
      throw std::runtime_error("scenario: duplicate node id " +
                               std::to_string(node.id));
    }
  }
  for (int id = 0; id < static_cast<int>(s.nodes.size()); ++id) {
    if (!seen.count(id)) {
      throw std::runtime_error("scenario: node ids must be dense 0..n-1");
    }
  }
  return s;
}

}  // namespace iabplan
