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

#include "astopo/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace astopo {
namespace {

// After a duplicate or self-pair, both endpoints are redrawn up to this
// many times before the edge is abandoned and counted as skipped.
constexpr int kPairResampleLimit = 32;

// Number of internal edges this step: floor(m-1) plus a Bernoulli trial on
// the fractional remainder.  No randomness is consumed when m-1 is whole.
std::uint32_t internal_edge_count(double m, Rng& rng) {
  const double extra = m - 1.0;
  const double base = std::floor(extra);
  const double frac = extra - base;
  std::uint32_t count = static_cast<std::uint32_t>(base);
  if (frac > 0.0 && rng.bernoulli(frac)) ++count;
  return count;
}

// Inserts customer->provider, flips the peering coin, and inserts the
// reverse edge when the arrangement came up symmetric.
ArrangementRecord insert_arrangement(AsGraph& graph, NodeId customer,
                                     NodeId provider, double p, Rng& rng) {
  graph.add_edge(customer, provider);
  ArrangementRecord rec;
  rec.customer = customer;
  rec.provider = provider;
  rec.symmetric = rng.bernoulli(p);
  rec.reverse_inserted = rec.symmetric && graph.add_edge(provider, customer);
  return rec;
}

// Draws an internal customer/provider pair within `region` (or globally),
// excluding the newborn node and resampling past duplicates and self-pairs.
// Returns false when the edge must be skipped: an endpoint scope with zero
// weight, or every resample exhausted.
bool draw_internal_pair(const AsGraph& graph,
                        std::optional<std::uint32_t> region, NodeId newborn,
                        Rng& rng, NodeId* customer, NodeId* provider) {
  if (graph.weight_sum(WeightKind::in_degree, region, newborn) == 0 ||
      graph.weight_sum(WeightKind::out_degree, region, newborn) == 0) {
    return false;
  }
  for (int attempt = 0; attempt <= kPairResampleLimit; ++attempt) {
    const NodeId c =
        *graph.sample_preferential(WeightKind::in_degree, region, rng, newborn);
    const NodeId v = *graph.sample_preferential(WeightKind::out_degree, region,
                                                rng, newborn);
    if (c != v && !graph.has_edge(c, v)) {
      *customer = c;
      *provider = v;
      return true;
    }
  }
  return false;
}

// Index drawn from a normalized weight vector by inverting the CDF.
std::uint32_t sample_region(const std::vector<double>& weights, Rng& rng) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  for (std::uint32_t j = 0; j + 1 < weights.size(); ++j) {
    cumulative += weights[j];
    if (u < cumulative) return j;
  }
  return static_cast<std::uint32_t>(weights.size() - 1);
}

std::uint32_t heaviest_region(const std::vector<double>& weights) {
  return static_cast<std::uint32_t>(
      std::max_element(weights.begin(), weights.end()) - weights.begin());
}

// Shared body of the directed steps.  `regional` enables region draws and
// locality coins; with it off this is exactly the basic directed step, so a
// single-region run and the basic model consume identical random streams.
StepRecord directed_step(AsGraph& graph, const ModelParams& params,
                         const std::vector<double>& weights, bool regional,
                         Rng& rng) {
  const NodeId newborn = static_cast<NodeId>(graph.node_count());
  if (graph.weight_sum(WeightKind::out_degree, std::nullopt, newborn) == 0) {
    throw std::invalid_argument(
        "growth step requires an existing node with positive out-degree");
  }

  StepRecord step;
  step.region = regional ? sample_region(weights, rng) : 0;
  step.node = graph.add_node(step.region);

  // First edge: the newborn buys transit from a provider chosen by
  // out-degree, inside its region when possible.
  std::optional<std::uint32_t> first_scope =
      regional ? std::optional<std::uint32_t>(step.region) : std::nullopt;
  if (first_scope &&
      graph.weight_sum(WeightKind::out_degree, first_scope, newborn) == 0) {
    first_scope.reset();  // virgin region: connect via a global edge
  }
  const NodeId provider = *graph.sample_preferential(WeightKind::out_degree,
                                                     first_scope, rng, newborn);
  step.arrangements.push_back(
      insert_arrangement(graph, newborn, provider, params.p, rng));

  const std::uint32_t internal = internal_edge_count(params.m, rng);
  for (std::uint32_t e = 0; e < internal; ++e) {
    std::optional<std::uint32_t> scope;
    if (regional && rng.bernoulli(params.alpha)) scope = step.region;
    if (scope &&
        (graph.weight_sum(WeightKind::in_degree, scope, newborn) == 0 ||
         graph.weight_sum(WeightKind::out_degree, scope, newborn) == 0)) {
      scope.reset();  // region cannot host the edge: retry globally
    }
    NodeId customer = 0;
    NodeId prov = 0;
    if (draw_internal_pair(graph, scope, newborn, rng, &customer, &prov)) {
      step.arrangements.push_back(
          insert_arrangement(graph, customer, prov, params.p, rng));
    } else {
      ++step.skipped;
    }
  }
  return step;
}

// Seed ring: node i is a customer of node (i+1) mod m0.  Undirected models
// make every ring edge a symmetric pair so degrees stay consistent with
// their encoding.
void build_seed_ring(AsGraph& graph, GenerationTrace& trace,
                     std::uint32_t m0, std::uint32_t region, bool symmetric) {
  for (std::uint32_t i = 0; i < m0; ++i) {
    graph.add_node(region);
    trace.seed_regions.push_back(region);
  }
  for (std::uint32_t i = 0; i < m0; ++i) {
    const NodeId customer = i;
    const NodeId provider = (i + 1) % m0;
    graph.add_edge(customer, provider);
    bool reverse_inserted = false;
    if (symmetric) reverse_inserted = graph.add_edge(provider, customer);
    trace.seed_arrangements.push_back(
        ArrangementRecord{customer, provider, symmetric, reverse_inserted});
  }
}

GenerationResult generate_directed(const ModelParams& params) {
  const bool regional =
      params.model == ModelKind::geodined && params.region_weights.size() > 1;
  const std::uint32_t region_count =
      params.model == ModelKind::geodined
          ? static_cast<std::uint32_t>(params.region_weights.size())
          : 1;
  const std::vector<double> weights =
      regional ? params.normalized_weights() : std::vector<double>{1.0};

  GenerationResult result{AsGraph(region_count, DegreeSemantics::directed),
                          GenerationTrace{}};
  result.trace.region_count = region_count;
  result.trace.semantics = DegreeSemantics::directed;
  build_seed_ring(result.graph, result.trace, params.m0,
                  regional ? heaviest_region(weights) : 0,
                  /*symmetric=*/false);

  Rng rng(params.seed);
  result.trace.steps.reserve(params.n - params.m0);
  while (result.graph.node_count() < params.n) {
    result.trace.steps.push_back(
        directed_step(result.graph, params, weights, regional, rng));
  }
  return result;
}

GenerationResult generate_undirected(const ModelParams& params) {
  GenerationResult result{AsGraph(1, DegreeSemantics::undirected),
                          GenerationTrace{}};
  result.trace.region_count = 1;
  result.trace.semantics = DegreeSemantics::undirected;
  build_seed_ring(result.graph, result.trace, params.m0, 0,
                  /*symmetric=*/true);

  AsGraph& graph = result.graph;
  Rng rng(params.seed);
  result.trace.steps.reserve(params.n - params.m0);
  while (graph.node_count() < params.n) {
    const NodeId newborn = graph.add_node(0);
    StepRecord step;
    step.node = newborn;

    // Under the anti-parallel encoding the undirected degree equals the
    // in-degree, so degree-proportional draws use in-degree weights.
    auto attach_pair = [&](NodeId a, NodeId b) {
      graph.add_edge(a, b);
      const bool reverse_inserted = graph.add_edge(b, a);
      step.arrangements.push_back(ArrangementRecord{a, b, true,
                                                    reverse_inserted});
    };

    if (params.model == ModelKind::ba) {
      // m distinct neighbors, each chosen proportionally to current degree.
      const auto target = static_cast<std::uint32_t>(params.m);
      for (std::uint32_t i = 0; i < target; ++i) {
        NodeId neighbor;
        do {
          neighbor = *graph.sample_preferential(WeightKind::in_degree,
                                                std::nullopt, rng, newborn);
        } while (graph.has_edge(newborn, neighbor));
        attach_pair(newborn, neighbor);
      }
    } else {
      // Growth edge first, then internal edges with one uniform endpoint
      // and one degree-proportional endpoint.
      const NodeId first = *graph.sample_preferential(WeightKind::in_degree,
                                                      std::nullopt, rng,
                                                      newborn);
      attach_pair(newborn, first);
      const std::uint32_t internal = internal_edge_count(params.m, rng);
      for (std::uint32_t e = 0; e < internal; ++e) {
        bool accepted = false;
        for (int attempt = 0; attempt <= kPairResampleLimit; ++attempt) {
          const NodeId u = static_cast<NodeId>(rng.below(newborn));
          const NodeId v = *graph.sample_preferential(WeightKind::in_degree,
                                                      std::nullopt, rng,
                                                      newborn);
          if (u != v && !graph.has_edge(u, v)) {
            attach_pair(u, v);
            accepted = true;
            break;
          }
        }
        if (!accepted) ++step.skipped;
      }
    }
    result.trace.steps.push_back(std::move(step));
  }
  return result;
}

}  // namespace

StepRecord dined_step(AsGraph& graph, const ModelParams& params, Rng& rng) {
  return directed_step(graph, params, {1.0}, /*regional=*/false, rng);
}

StepRecord geodined_step(AsGraph& graph, const ModelParams& params, Rng& rng) {
  // A single region reduces the model to the basic directed step; taking
  // that path verbatim keeps the two models bit-identical per seed.
  if (params.region_weights.size() == 1) return dined_step(graph, params, rng);
  return directed_step(graph, params, params.normalized_weights(),
                       /*regional=*/true, rng);
}

GenerationResult generate(const ModelParams& params) {
  params.validate();
  switch (params.model) {
    case ModelKind::ba:
    case ModelKind::ined:
      return generate_undirected(params);
    case ModelKind::dined:
    case ModelKind::geodined:
      return generate_directed(params);
  }
  throw std::invalid_argument("generate: unknown model");
}

AsGraph generate_ba(const ModelParams& params) {
  ModelParams adjusted = params;
  adjusted.model = ModelKind::ba;
  return std::move(generate(adjusted).graph);
}

AsGraph generate_ined(const ModelParams& params) {
  ModelParams adjusted = params;
  adjusted.model = ModelKind::ined;
  return std::move(generate(adjusted).graph);
}

AsGraph replay(const GenerationTrace& trace) {
  AsGraph graph(trace.region_count, trace.semantics);
  const auto apply = [&graph](const ArrangementRecord& rec) {
    graph.add_edge(rec.customer, rec.provider);
    if (rec.symmetric) graph.add_edge(rec.provider, rec.customer);
  };
  for (std::uint32_t region : trace.seed_regions) graph.add_node(region);
  for (const auto& rec : trace.seed_arrangements) apply(rec);
  for (const auto& step : trace.steps) {
    if (graph.add_node(step.region) != step.node) {
      throw std::invalid_argument("replay: step node ids are not dense");
    }
    for (const auto& rec : step.arrangements) apply(rec);
  }
  return graph;
}

}  // namespace astopo
