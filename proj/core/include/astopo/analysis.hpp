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

#ifndef ASTOPO_ANALYSIS_HPP_
#define ASTOPO_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "astopo/graph.hpp"

namespace astopo {

// Which degree a distribution is taken over.
enum class DegreeKind { undirected, in, out };

// Empirical complementary cumulative degree distribution: for each distinct
// positive degree k present, the fraction of scope nodes with degree >= k.
// Fractions are over every node in scope, so isolated nodes lower them.
struct CcdfCurve {
  struct Point {
    std::uint32_t degree;
    double fraction;
  };
  std::vector<Point> points;  // ascending degree, nonincreasing fraction
  DegreeKind kind = DegreeKind::undirected;
  std::optional<std::uint32_t> region;  // nullopt = whole graph
  std::uint64_t scope_node_count = 0;
};

// Least-squares fit of log(fraction) against log(degree) over a degree
// range.  eta is the slope magnitude; the density exponent is
// gamma = eta + 1.
struct PowerLawFit {
  double eta = 0.0;
  double gamma = 0.0;
  std::uint32_t k_min = 0;
  std::uint32_t k_max = 0;
  std::uint32_t points_used = 0;
  double r_squared = 0.0;
};

struct LeafStats {
  std::uint64_t count = 0;
  double fraction = 0.0;
};

// One dense core: member ids, induced undirected density, and the single
// region containing every member (absent when members span regions).
struct DenseCore {
  std::vector<NodeId> members;
  double density = 0.0;
  std::optional<std::uint32_t> region;

  std::size_t size() const { return members.size(); }
};

struct CoreReport {
  std::vector<DenseCore> cores;  // sizes nonincreasing
  double density_threshold = 0.0;
  std::size_t min_size = 0;
};

// Exact empirical CCDF over the nodes of `region` (or the whole graph).
// Undirected kind uses the undirected view's degrees.  Throws
// std::invalid_argument when the scope holds no nodes.
CcdfCurve ccdf(const AsGraph& graph, DegreeKind kind,
               std::optional<std::uint32_t> region = std::nullopt);

// Fits the curve over [k_min, k_max].  When k_max is absent it defaults to
// the largest degree whose CCDF value is still >= 10 / scope_node_count,
// trimming the noisy extreme tail.  Throws std::invalid_argument when fewer
// than 5 curve points fall inside the range.
PowerLawFit fit_power_law(const CcdfCurve& curve, std::uint32_t k_min = 1,
                          std::optional<std::uint32_t> k_max = std::nullopt);

// Counts leaves.  Directed-semantics graphs: in-degree 0 and out-degree 1.
// Undirected-semantics graphs (anti-parallel encodings): undirected
// degree 1.
LeafStats count_leaves(const AsGraph& graph);

// Fraction of peering arrangements among all arrangements: unordered pairs
// carrying both directed edges, divided by unordered pairs carrying at
// least one.  Throws std::invalid_argument on a graph with no edges.
double symmetric_fraction(const AsGraph& graph);

// Extracts vertex-disjoint dense cores from the undirected view.  Each
// round runs greedy minimum-degree peeling (ties broken toward the lowest
// node id) over the remaining vertices and selects the largest peeling
// suffix of size >= min_size whose density meets the threshold; its
// vertices are removed and the search repeats until no suffix qualifies.
// Cores are reported largest first.  Requires 0 < density_threshold <= 1
// and min_size >= 2.
CoreReport find_dense_cores(const AsGraph& graph, double density_threshold,
                            std::size_t min_size);

}  // namespace astopo

#endif  // ASTOPO_ANALYSIS_HPP_
