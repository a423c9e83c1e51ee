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

#include "astopo/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace astopo {

AsGraph::AsGraph(std::uint32_t region_count, DegreeSemantics semantics)
    : region_count_(region_count), semantics_(semantics) {
  if (region_count == 0) {
    throw std::invalid_argument("AsGraph: region_count must be >= 1");
  }
}

NodeId AsGraph::add_node(std::uint32_t region) {
  if (region >= region_count_) {
    throw std::out_of_range("add_node: region " + std::to_string(region) +
                            " out of range (have " +
                            std::to_string(region_count_) + " regions)");
  }
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(NodeRecord{id, region, 0, 0});
  out_adj_.emplace_back();
  in_adj_.emplace_back();
  return id;
}

bool AsGraph::add_edge(NodeId customer, NodeId provider) {
  if (customer == provider) {
    throw std::invalid_argument("add_edge: self-loop at node " +
                                std::to_string(customer));
  }
  if (customer >= nodes_.size() || provider >= nodes_.size()) {
    throw std::out_of_range("add_edge: unknown node id");
  }
  if (!edge_set_.insert(edge_key(customer, provider)).second) {
    return false;
  }
  out_adj_[customer].push_back(provider);
  in_adj_[provider].push_back(customer);
  ++nodes_[customer].out_degree;
  ++nodes_[provider].in_degree;
  ++out_degree_sum_;
  ++in_degree_sum_;
  if (edge_set_.count(edge_key(provider, customer)) != 0) {
    ++symmetric_pairs_;
  }
  return true;
}

std::uint64_t AsGraph::weight_sum(WeightKind kind,
                                  std::optional<std::uint32_t> region_filter,
                                  std::optional<NodeId> id_limit) const {
  const NodeId limit = id_limit.value_or(static_cast<NodeId>(nodes_.size()));
  std::uint64_t total = 0;
  for (NodeId i = 0; i < limit; ++i) {
    if (region_filter && nodes_[i].region != *region_filter) continue;
    total += kind == WeightKind::in_degree ? nodes_[i].in_degree
                                           : nodes_[i].out_degree;
  }
  return total;
}

std::optional<NodeId> AsGraph::sample_preferential(
    WeightKind kind, std::optional<std::uint32_t> region_filter, Rng& rng,
    std::optional<NodeId> id_limit) const {
  const NodeId limit = id_limit.value_or(static_cast<NodeId>(nodes_.size()));
  const std::uint64_t total = weight_sum(kind, region_filter, limit);
  if (total == 0) return std::nullopt;

  std::uint64_t target = rng.below(total);
  for (NodeId i = 0; i < limit; ++i) {
    if (region_filter && nodes_[i].region != *region_filter) continue;
    const std::uint64_t w = kind == WeightKind::in_degree
                                ? nodes_[i].in_degree
                                : nodes_[i].out_degree;
    if (target < w) return i;
    target -= w;
  }
  // Unreachable: target < total and the weights sum to total.
  throw std::logic_error("sample_preferential: cumulative walk overran");
}

UndirectedView AsGraph::undirected_view() const {
  UndirectedView view;
  view.node_count = nodes_.size();
  view.adjacency.resize(nodes_.size());
  for (NodeId u = 0; u < nodes_.size(); ++u) {
    for (NodeId v : out_adj_[u]) {
      // Count each unordered pair once; anti-parallel pairs collapse.
      if (u < v || !has_edge(v, u)) {
        view.adjacency[u].push_back(v);
        view.adjacency[v].push_back(u);
        ++view.edge_count;
      }
    }
  }
  for (auto& neighbors : view.adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return view;
}

std::vector<std::pair<NodeId, NodeId>> AsGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> result;
  result.reserve(edge_set_.size());
  for (NodeId u = 0; u < nodes_.size(); ++u) {
    for (NodeId v : out_adj_[u]) {
      result.emplace_back(u, v);
    }
  }
  return result;
}

bool operator==(const AsGraph& a, const AsGraph& b) {
  if (a.region_count_ != b.region_count_ || a.semantics_ != b.semantics_) {
    return false;
  }
  if (a.nodes_.size() != b.nodes_.size() ||
      a.edge_set_.size() != b.edge_set_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    if (a.nodes_[i].region != b.nodes_[i].region) return false;
  }
  return a.edge_set_ == b.edge_set_;
}

}  // namespace astopo
