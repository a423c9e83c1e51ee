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

#include "astopo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace astopo {

CcdfCurve ccdf(const AsGraph& graph, DegreeKind kind,
               std::optional<std::uint32_t> region) {
  std::optional<UndirectedView> view;
  if (kind == DegreeKind::undirected) view = graph.undirected_view();

  // Degree histogram over the scope; isolated nodes contribute to the
  // denominator but never form a curve point.
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::uint64_t scope_nodes = 0;
  for (const NodeRecord& node : graph.nodes()) {
    if (region && node.region != *region) continue;
    ++scope_nodes;
    std::uint32_t degree = 0;
    switch (kind) {
      case DegreeKind::undirected:
        degree = static_cast<std::uint32_t>(view->degree(node.id));
        break;
      case DegreeKind::in:
        degree = node.in_degree;
        break;
      case DegreeKind::out:
        degree = node.out_degree;
        break;
    }
    if (degree > 0) ++histogram[degree];
  }
  if (scope_nodes == 0) {
    throw std::invalid_argument("ccdf: scope contains no nodes");
  }

  CcdfCurve curve;
  curve.kind = kind;
  curve.region = region;
  curve.scope_node_count = scope_nodes;
  curve.points.reserve(histogram.size());
  std::uint64_t at_least = 0;
  for (auto it = histogram.rbegin(); it != histogram.rend(); ++it) {
    at_least += it->second;
    curve.points.push_back(
        {it->first, static_cast<double>(at_least) / scope_nodes});
  }
  std::reverse(curve.points.begin(), curve.points.end());
  return curve;
}

PowerLawFit fit_power_law(const CcdfCurve& curve, std::uint32_t k_min,
                          std::optional<std::uint32_t> k_max) {
  if (curve.points.empty() || curve.scope_node_count == 0) {
    throw std::invalid_argument("fit_power_law: empty curve");
  }
  std::uint32_t upper = 0;
  if (k_max) {
    upper = *k_max;
  } else {
    // Default upper cutoff: drop degrees so rare that fewer than 10 scope
    // nodes reach them, which trims the noisy extreme tail of the curve.
    const double floor_fraction =
        10.0 / static_cast<double>(curve.scope_node_count);
    for (const auto& point : curve.points) {
      if (point.fraction >= floor_fraction) upper = point.degree;
    }
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  std::uint32_t used = 0;
  for (const auto& point : curve.points) {
    if (point.degree < k_min || point.degree > upper) continue;
    const double x = std::log(static_cast<double>(point.degree));
    const double y = std::log(point.fraction);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    ++used;
  }
  if (used < 5) {
    throw std::invalid_argument(
        "fit_power_law: fewer than 5 distinct degrees in the fit range");
  }

  const double n = static_cast<double>(used);
  const double var_x = sxx - sx * sx / n;
  const double var_y = syy - sy * sy / n;
  const double cov = sxy - sx * sy / n;
  const double slope = cov / var_x;

  PowerLawFit fit;
  fit.eta = -slope;
  fit.gamma = fit.eta + 1.0;
  fit.k_min = k_min;
  fit.k_max = upper;
  fit.points_used = used;
  fit.r_squared = var_y > 0.0 ? (cov * cov) / (var_x * var_y) : 1.0;
  return fit;
}

LeafStats count_leaves(const AsGraph& graph) {
  LeafStats stats;
  if (graph.node_count() == 0) return stats;
  if (graph.semantics() == DegreeSemantics::directed) {
    for (const NodeRecord& node : graph.nodes()) {
      if (node.in_degree == 0 && node.out_degree == 1) ++stats.count;
    }
  } else {
    const UndirectedView view = graph.undirected_view();
    for (NodeId id = 0; id < graph.node_count(); ++id) {
      if (view.degree(id) == 1) ++stats.count;
    }
  }
  stats.fraction =
      static_cast<double>(stats.count) / static_cast<double>(graph.node_count());
  return stats;
}

double symmetric_fraction(const AsGraph& graph) {
  if (graph.edge_count() == 0) {
    throw std::invalid_argument("symmetric_fraction: graph has no edges");
  }
  // Each symmetric arrangement contributes two directed edges but is one
  // unordered pair, so pairs = directed edges - symmetric arrangements.
  const std::uint64_t pairs =
      graph.edge_count() - graph.symmetric_pair_count();
  return static_cast<double>(graph.symmetric_pair_count()) /
         static_cast<double>(pairs);
}

namespace {

// One peeling round over the vertices still alive.  Removes vertices in
// minimum-degree order (lowest id on ties) and returns the first — hence
// largest — remaining-set snapshot ("suffix") with size >= min_size and
// density >= threshold, or nothing, ending the extraction.
std::optional<DenseCore> peel_round(const UndirectedView& view,
                                    const std::vector<bool>& alive,
                                    std::size_t alive_count,
                                    double threshold, std::size_t min_size) {
  if (alive_count < min_size) return std::nullopt;

  std::vector<std::uint32_t> degree(view.node_count, 0);
  std::uint64_t edges = 0;
  std::set<std::pair<std::uint32_t, NodeId>> queue;  // (degree, id), ordered
  for (NodeId u = 0; u < view.node_count; ++u) {
    if (!alive[u]) continue;
    std::uint32_t d = 0;
    for (NodeId v : view.adjacency[u]) {
      if (alive[v]) ++d;
    }
    degree[u] = d;
    edges += d;
    queue.emplace(d, u);
  }
  edges /= 2;

  // Walk the peeling sequence, scoring each remaining set before the next
  // removal.  Sizes only shrink, so the first qualifying set is the largest.
  std::vector<bool> removed(view.node_count, false);
  std::size_t size = alive_count;
  while (size >= min_size) {
    const double possible = static_cast<double>(size) *
                            static_cast<double>(size - 1) / 2.0;
    const double density = static_cast<double>(edges) / possible;
    if (density >= threshold) {
      DenseCore core;
      core.density = density;
      core.members.reserve(size);
      for (const auto& [d, u] : queue) core.members.push_back(u);
      std::sort(core.members.begin(), core.members.end());
      return core;
    }
    const auto [d, u] = *queue.begin();
    queue.erase(queue.begin());
    removed[u] = true;
    edges -= d;
    for (NodeId v : view.adjacency[u]) {
      if (!alive[v] || removed[v]) continue;
      queue.erase({degree[v], v});
      --degree[v];
      queue.insert({degree[v], v});
    }
    --size;
  }
  return std::nullopt;
}

}  // namespace

CoreReport find_dense_cores(const AsGraph& graph, double density_threshold,
                            std::size_t min_size) {
  if (!(density_threshold > 0.0 && density_threshold <= 1.0)) {
    throw std::invalid_argument(
        "find_dense_cores: threshold must lie in (0, 1]");
  }
  if (min_size < 2) {
    throw std::invalid_argument("find_dense_cores: min_size must be >= 2");
  }

  CoreReport report;
  report.density_threshold = density_threshold;
  report.min_size = min_size;

  const UndirectedView view = graph.undirected_view();
  std::vector<bool> alive(view.node_count, true);
  std::size_t alive_count = view.node_count;
  while (true) {
    std::optional<DenseCore> core =
        peel_round(view, alive, alive_count, density_threshold, min_size);
    if (!core) break;
    for (NodeId u : core->members) alive[u] = false;
    alive_count -= core->members.size();

    // Regional when every member shares one region label.
    core->region = graph.node(core->members.front()).region;
    for (NodeId u : core->members) {
      if (graph.node(u).region != *core->region) {
        core->region.reset();
        break;
      }
    }
    report.cores.push_back(std::move(*core));
  }

  std::stable_sort(report.cores.begin(), report.cores.end(),
                   [](const DenseCore& a, const DenseCore& b) {
                     return a.size() > b.size();
                   });
  return report;
}

}  // namespace astopo
