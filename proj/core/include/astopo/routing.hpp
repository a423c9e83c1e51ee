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

#ifndef ASTOPO_ROUTING_HPP_
#define ASTOPO_ROUTING_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "astopo/graph.hpp"
#include "astopo/rng.hpp"

namespace astopo {

// Degree-based node classes.  Thresholds are on undirected degree:
// tier1 >= 100 > tier2 >= 20 > tier3 >= 3 > untiered.
enum class Tier : std::uint8_t { tier1, tier2, tier3, untiered };

constexpr std::uint32_t kTier1MinDegree = 100;
constexpr std::uint32_t kTier2MinDegree = 20;
constexpr std::uint32_t kTier3MinDegree = 3;

struct TierAssignment {
  std::vector<Tier> tier_of;  // indexed by node id
  std::array<std::vector<NodeId>, 3> members;  // tier1, tier2, tier3
};

// Per-tier routing-detour statistics.  Sampled pairs fall into three
// buckets: `inflated` (reachable both ways but longer under the policy),
// `unreachable` (reachable only without the policy), and the remainder
// (same length, or unreachable either way).  The headline percentage
// treats unreachable as infinitely inflated.
struct TierInflation {
  std::uint64_t sampled = 0;
  std::uint64_t inflated = 0;
  std::uint64_t unreachable = 0;
  double inflation_pct = 0.0;  // 100 * (inflated + unreachable) / sampled
};

struct InflationReport {
  std::array<TierInflation, 3> tiers;  // tier1, tier2, tier3
  std::uint64_t sample_size = 0;       // requested sources per tier
  std::uint64_t rng_seed = 0;
};

TierAssignment classify_tiers(const AsGraph& graph);

// Hop count of the shortest path on the undirected view, or absent when
// t is unreachable from s.  Throws std::out_of_range on unknown ids.
std::optional<std::uint32_t> shortest_path_unrestricted(const AsGraph& graph,
                                                        NodeId s, NodeId t);

// Hop count of the shortest no-valley path: a walk that first climbs
// customer->provider edges, optionally crosses a single peering arrangement
// (anti-parallel pair) at its summit, then descends provider->customer
// edges, never climbing or peering again after the descent begins.
// Computed by breadth-first search over (node, climbing?) states; absent
// when no such path exists.
std::optional<std::uint32_t> shortest_no_valley_path(const AsGraph& graph,
                                                     NodeId s, NodeId t);

// Samples `sample_size` sources per tier (distinct when the tier is large
// enough, with replacement otherwise) and one uniform target per source
// (resampled while target == source), then measures inflation for each
// pair.  Empty tiers are reported with zero samples.  Requires
// sample_size >= 1.
InflationReport path_inflation(const AsGraph& graph,
                               const TierAssignment& tiers,
                               std::uint64_t sample_size, Rng& rng);

}  // namespace astopo

#endif  // ASTOPO_ROUTING_HPP_
