// Copyright 2026 The Astopo Authors
//
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

#include "astopo/routing.hpp"

#include <cstddef>
#include <deque>
#include <limits>
#include <stdexcept>

namespace astopo {
namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

enum class Hop : std::uint8_t { up, down, peer };

// Per-node list of (neighbor, hop kind): climbing edges (customer->provider
// only), descending edges (reverse only), and peerings (both directions).
using HopLists = std::vector<std::vector<std::pair<NodeId, Hop>>>;

HopLists build_hop_lists(const AsGraph& graph) {
  HopLists hops(graph.node_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    for (NodeId v : graph.providers_of(u)) {
      hops[u].emplace_back(v, graph.has_edge(v, u) ? Hop::peer : Hop::up);
    }
    for (NodeId v : graph.customers_of(u)) {
      if (!graph.has_edge(u, v)) hops[u].emplace_back(v, Hop::down);
    }
  }
  return hops;
}

std::optional<std::uint32_t> bfs_unrestricted(const HopLists& hops, NodeId s,
                                              NodeId t) {
  if (s == t) return 0;
  std::vector<std::uint32_t> dist(hops.size(), kUnvisited);
  std::deque<NodeId> frontier{s};
  dist[s] = 0;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop_front();
    for (const auto& [v, kind] : hops[u]) {
      if (dist[v] != kUnvisited) continue;
      dist[v] = dist[u] + 1;
      if (v == t) return dist[v];
      frontier.push_back(v);
    }
  }
  return std::nullopt;
}

// Valley-free search over (node, still-climbing?) states.  A climbing walk
// may take up hops and keep climbing; its first peer or down hop switches it
// to descending, after which only down hops remain legal (so a walk uses at
// most one peering, at its summit).  The shortest valley-free walk never
// needs to revisit a state, so plain BFS over the 2|V| states is exact.
std::optional<std::uint32_t> bfs_no_valley(const HopLists& hops, NodeId s,
                                           NodeId t) {
  if (s == t) return 0;
  const std::size_t n = hops.size();
  std::vector<std::uint32_t> dist(2 * n, kUnvisited);
  const auto state = [n](NodeId node, bool climbing) {
    return static_cast<std::size_t>(node) + (climbing ? 0 : n);
  };
  std::deque<std::pair<NodeId, bool>> frontier{{s, true}};
  dist[state(s, true)] = 0;
  while (!frontier.empty()) {
    const auto [u, climbing] = frontier.front();
    frontier.pop_front();
    const std::uint32_t next_dist = dist[state(u, climbing)] + 1;
    for (const auto& [v, kind] : hops[u]) {
      if (!climbing && kind != Hop::down) continue;
      const bool still_climbing = climbing && kind == Hop::up;
      if (dist[state(v, still_climbing)] != kUnvisited) continue;
      dist[state(v, still_climbing)] = next_dist;
      if (v == t) return next_dist;
      frontier.emplace_back(v, still_climbing);
    }
  }
  return std::nullopt;
}

void check_ids(const AsGraph& graph, NodeId s, NodeId t) {
  if (s >= graph.node_count() || t >= graph.node_count()) {
    throw std::out_of_range("routing: unknown node id");
  }
}

TierInflation measure_tier(const HopLists& hops,
                           const std::vector<NodeId>& members,
                           std::uint64_t sample_size, std::size_t node_count,
                           Rng& rng) {
  TierInflation stats;
  if (members.empty()) return stats;

  // Distinct sources when the tier is large enough (partial Fisher-Yates
  // shuffle); otherwise independent draws with replacement.
  std::vector<NodeId> sources;
  sources.reserve(sample_size);
  if (members.size() >= sample_size) {
    std::vector<NodeId> pool = members;
    for (std::uint64_t i = 0; i < sample_size; ++i) {
      const std::uint64_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      sources.push_back(pool[i]);
    }
  } else {
    for (std::uint64_t i = 0; i < sample_size; ++i) {
      sources.push_back(members[rng.below(members.size())]);
    }
  }

  for (const NodeId s : sources) {
    NodeId t = static_cast<NodeId>(rng.below(node_count));
    while (t == s) t = static_cast<NodeId>(rng.below(node_count));
    ++stats.sampled;

    const auto direct = bfs_unrestricted(hops, s, t);
    if (!direct) continue;  // unreachable outright: nothing to inflate
    const auto policy = bfs_no_valley(hops, s, t);
    if (!policy) {
      ++stats.unreachable;
    } else if (*policy > *direct) {
      ++stats.inflated;
    }
  }
  stats.inflation_pct = 100.0 *
                        static_cast<double>(stats.inflated + stats.unreachable) /
                        static_cast<double>(stats.sampled);
  return stats;
}

}  // namespace

TierAssignment classify_tiers(const AsGraph& graph) {
  const UndirectedView view = graph.undirected_view();
  TierAssignment assignment;
  assignment.tier_of.resize(graph.node_count(), Tier::untiered);
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    const std::uint32_t degree = view.degree(id);
    Tier tier = Tier::untiered;
    if (degree >= kTier1MinDegree) {
      tier = Tier::tier1;
    } else if (degree >= kTier2MinDegree) {
      tier = Tier::tier2;
    } else if (degree >= kTier3MinDegree) {
      tier = Tier::tier3;
    }
    assignment.tier_of[id] = tier;
    if (tier != Tier::untiered) {
      assignment.members[static_cast<std::size_t>(tier)].push_back(id);
    }
  }
  return assignment;
}

std::optional<std::uint32_t> shortest_path_unrestricted(const AsGraph& graph,
                                                        NodeId s, NodeId t) {
  check_ids(graph, s, t);
  return bfs_unrestricted(build_hop_lists(graph), s, t);
}

std::optional<std::uint32_t> shortest_no_valley_path(const AsGraph& graph,
                                                     NodeId s, NodeId t) {
  check_ids(graph, s, t);
  return bfs_no_valley(build_hop_lists(graph), s, t);
}

InflationReport path_inflation(const AsGraph& graph,
                               const TierAssignment& tiers,
                               std::uint64_t sample_size, Rng& rng) {
  if (sample_size == 0) {
    throw std::invalid_argument("path_inflation: sample_size must be >= 1");
  }
  const HopLists hops = build_hop_lists(graph);
  InflationReport report;
  report.sample_size = sample_size;
  report.rng_seed = rng.seed();
  for (std::size_t tier = 0; tier < report.tiers.size(); ++tier) {
    report.tiers[tier] = measure_tier(hops, tiers.members[tier], sample_size,
                                      graph.node_count(), rng);
  }
  return report;
}

}  // namespace astopo
