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

#ifndef ASTOPO_GRAPH_HPP_
#define ASTOPO_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "astopo/rng.hpp"

namespace astopo {

using NodeId = std::uint32_t;

// ba/ined encode undirected graphs as all-symmetric arrangements; the flag
// selects the matching leaf definition (undirected degree 1 instead of
// in-degree 0 / out-degree 1).
enum class DegreeSemantics { directed, undirected };

enum class WeightKind { in_degree, out_degree };

struct NodeRecord {
  NodeId id;
  std::uint32_t region;
  std::uint32_t in_degree;   // number of customers
  std::uint32_t out_degree;  // number of providers
};

// Unordered-pair projection: one edge per peering arrangement, anti-parallel
// pairs collapsed. Adjacency lists are sorted by neighbor id.
struct UndirectedView {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::vector<std::vector<NodeId>> adjacency;

  std::uint32_t degree(NodeId node) const {
    return static_cast<std::uint32_t>(adjacency[node].size());
  }
};

// Directed simple graph over customer->provider edges with per-node region
// labels. Anti-parallel pairs are allowed and model one symmetric (peer to
// peer) arrangement. Single writer while growing; immutable afterwards and
// safe to read from any number of threads.
class AsGraph {
 public:
  explicit AsGraph(std::uint32_t region_count = 1,
                   DegreeSemantics semantics = DegreeSemantics::directed);

  // Appends a node with both degrees 0; returns its dense id.
  NodeId add_node(std::uint32_t region);

  // Inserts customer->provider if the ordered pair is absent. Returns false
  // (graph unchanged) when present. Throws on self-loops and unknown ids.
  bool add_edge(NodeId customer, NodeId provider);

  bool has_edge(NodeId customer, NodeId provider) const {
    return edge_set_.count(edge_key(customer, provider)) != 0;
  }

  // Draws a node with probability weight(i) / sum of weights over the
  // eligible set: nodes with id < id_limit (default: all) whose region
  // matches region_filter (default: any). Returns nullopt when the eligible
  // weight sum is zero. Exact integer cumulative search, O(n) per draw.
  std::optional<NodeId> sample_preferential(
      WeightKind kind, std::optional<std::uint32_t> region_filter, Rng& rng,
      std::optional<NodeId> id_limit = std::nullopt) const;

  // Sum of node weights over the same eligible set; the zero test used by
  // generators to decide local-edge fallbacks without consuming randomness.
  std::uint64_t weight_sum(WeightKind kind,
                           std::optional<std::uint32_t> region_filter,
                           std::optional<NodeId> id_limit = std::nullopt) const;

  UndirectedView undirected_view() const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_set_.size(); }
  std::uint64_t in_degree_sum() const { return in_degree_sum_; }
  std::uint64_t out_degree_sum() const { return out_degree_sum_; }
  // Number of unordered pairs connected by two anti-parallel edges.
  std::size_t symmetric_pair_count() const { return symmetric_pairs_; }
  std::uint32_t region_count() const { return region_count_; }
  DegreeSemantics semantics() const { return semantics_; }

  const NodeRecord& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<NodeRecord>& nodes() const { return nodes_; }

  // Out-neighbors of `customer` (its providers), in insertion order.
  const std::vector<NodeId>& providers_of(NodeId customer) const {
    return out_adj_.at(customer);
  }
  // In-neighbors of `provider` (its customers), in insertion order.
  const std::vector<NodeId>& customers_of(NodeId provider) const {
    return in_adj_.at(provider);
  }

  // All directed edges ordered by customer id, then insertion order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const AsGraph& a, const AsGraph& b);

 private:
  static std::uint64_t edge_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::vector<NodeRecord> nodes_;
  std::vector<std::vector<NodeId>> out_adj_;
  std::vector<std::vector<NodeId>> in_adj_;
  std::unordered_set<std::uint64_t> edge_set_;
  std::uint64_t in_degree_sum_ = 0;
  std::uint64_t out_degree_sum_ = 0;
  std::size_t symmetric_pairs_ = 0;
  std::uint32_t region_count_;
  DegreeSemantics semantics_;
};

}  // namespace astopo

#endif  // ASTOPO_GRAPH_HPP_
