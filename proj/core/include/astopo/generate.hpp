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

#ifndef ASTOPO_GENERATE_HPP_
#define ASTOPO_GENERATE_HPP_

#include <cstdint>
#include <vector>

#include "astopo/graph.hpp"
#include "astopo/params.hpp"
#include "astopo/rng.hpp"

namespace astopo {

// One edge arrangement added during growth.  A symmetric arrangement is a
// peering: the reverse edge provider->customer is inserted as well (unless
// it already existed, in which case `reverse_inserted` is false and the
// arrangement is symmetric anyway).
struct ArrangementRecord {
  NodeId customer = 0;
  NodeId provider = 0;
  bool symmetric = false;
  bool reverse_inserted = false;

  friend bool operator==(const ArrangementRecord&,
                         const ArrangementRecord&) = default;
};

// Everything one growth step did: the node born, its region, the
// arrangements actually inserted, and how many draws were abandoned after
// exhausting resampling (duplicates / self-pairs / empty local scope).
struct StepRecord {
  NodeId node = 0;
  std::uint32_t region = 0;
  std::vector<ArrangementRecord> arrangements;
  std::uint32_t skipped = 0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

// Complete, replayable record of a generation run.  `replay` applied to a
// trace rebuilds the exact graph, so traces double as a compact determinism
// witness in tests.
struct GenerationTrace {
  std::uint32_t region_count = 1;
  DegreeSemantics semantics = DegreeSemantics::directed;
  // Seed nodes in birth order; element i holds the region of node i.
  std::vector<std::uint32_t> seed_regions;
  std::vector<ArrangementRecord> seed_arrangements;
  std::vector<StepRecord> steps;

  std::uint64_t total_skipped() const {
    std::uint64_t total = 0;
    for (const auto& step : steps) total += step.skipped;
    return total;
  }

  friend bool operator==(const GenerationTrace&,
                         const GenerationTrace&) = default;
};

struct GenerationResult {
  AsGraph graph;
  GenerationTrace trace;
};

// Runs the model selected by `params` from the seed ring to n nodes.
// Identical params (seed included) produce bit-identical results.
// Throws std::invalid_argument when params.validate() fails.
GenerationResult generate(const ModelParams& params);

// Single growth step of the directed model: one new node whose first edge
// picks a provider proportionally to out-degree, then E extra edges between
// existing nodes (customer ~ in-degree, provider ~ out-degree), where
// E = floor(m-1) + Bernoulli(frac(m-1)).  Every arrangement independently
// becomes symmetric with probability p.  Requires at least one existing
// node with positive out-degree.
StepRecord dined_step(AsGraph& graph, const ModelParams& params, Rng& rng);

// Regional growth step: the new node's region is drawn from
// params.region_weights; its first edge is restricted to that region
// (falling back to a global draw when the region has no eligible provider);
// each extra edge is local with probability alpha, global otherwise.
StepRecord geodined_step(AsGraph& graph, const ModelParams& params, Rng& rng);

// Undirected baselines.  Both realize each undirected edge as an
// anti-parallel pair so every analysis applies unchanged.  generate_ba
// requires integer m <= m0; generate_ined allows fractional m.
AsGraph generate_ba(const ModelParams& params);
AsGraph generate_ined(const ModelParams& params);

// Rebuilds the graph a trace came from.  replay(result.trace) == result.graph
// for every generate() result.
AsGraph replay(const GenerationTrace& trace);

}  // namespace astopo

#endif  // ASTOPO_GENERATE_HPP_
