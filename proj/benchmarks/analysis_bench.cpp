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
//
// Analysis-pipeline microbenchmarks over one generated default graph:
// distribution fitting, core peeling, routing measurement, serialization.

#include <cstdint>
#include <map>
#include <sstream>

#include <benchmark/benchmark.h>

#include "astopo/analysis.hpp"
#include "astopo/edge_list.hpp"
#include "astopo/generate.hpp"
#include "astopo/graph.hpp"
#include "astopo/params.hpp"
#include "astopo/regions.hpp"
#include "astopo/rng.hpp"
#include "astopo/routing.hpp"

namespace {

const astopo::AsGraph& default_graph(std::uint32_t n) {
  static std::map<std::uint32_t, astopo::AsGraph> cache;
  const auto found = cache.find(n);
  if (found != cache.end()) return found->second;
  astopo::ModelParams params;
  params.n = n;
  params.seed = 1;
  params.region_weights = astopo::default_region_table().weights;
  return cache.emplace(n, astopo::generate(params).graph).first->second;
}

void BM_CcdfFit(benchmark::State& state) {
  const astopo::AsGraph& graph =
      default_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    const astopo::CcdfCurve curve =
        astopo::ccdf(graph, astopo::DegreeKind::undirected);
    benchmark::DoNotOptimize(astopo::fit_power_law(curve).eta);
  }
}
BENCHMARK(BM_CcdfFit)->Arg(5000)->Arg(15000);

void BM_DenseCores(benchmark::State& state) {
  const astopo::AsGraph& graph =
      default_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        astopo::find_dense_cores(graph, 0.70, 7).cores.size());
  }
}
BENCHMARK(BM_DenseCores)->Arg(5000)->Arg(15000);

void BM_PathInflation(benchmark::State& state) {
  const astopo::AsGraph& graph = default_graph(15000);
  const astopo::TierAssignment tiers = astopo::classify_tiers(graph);
  for (auto _ : state) {
    astopo::Rng rng(1);
    benchmark::DoNotOptimize(
        astopo::path_inflation(graph, tiers,
                               static_cast<std::uint64_t>(state.range(0)),
                               rng)
            .tiers[0]
            .inflation_pct);
  }
}
BENCHMARK(BM_PathInflation)->Arg(100)->Arg(1000);

void BM_EdgeListRoundTrip(benchmark::State& state) {
  const astopo::AsGraph& graph =
      default_graph(static_cast<std::uint32_t>(state.range(0)));
  astopo::ModelParams params;
  params.n = static_cast<std::uint32_t>(state.range(0));
  params.seed = 1;
  params.region_weights = astopo::default_region_table().weights;
  const astopo::EdgeListHeader header = astopo::make_header(params);
  for (auto _ : state) {
    std::stringstream stream;
    astopo::write_edge_list(stream, graph, header);
    benchmark::DoNotOptimize(
        astopo::read_edge_list(stream, "bench").graph.edge_count());
  }
}
BENCHMARK(BM_EdgeListRoundTrip)->Arg(5000)->Arg(15000);

}  // namespace
