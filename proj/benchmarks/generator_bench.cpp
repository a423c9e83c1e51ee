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
// Growth-model microbenchmarks: end-to-end generation at several sizes and
// the preferential draw that dominates each step.

#include <cstdint>

#include <benchmark/benchmark.h>

#include "astopo/generate.hpp"
#include "astopo/graph.hpp"
#include "astopo/params.hpp"
#include "astopo/regions.hpp"
#include "astopo/rng.hpp"

namespace {

astopo::ModelParams base_params(astopo::ModelKind model, std::uint32_t n) {
  astopo::ModelParams params;
  params.model = model;
  params.n = n;
  params.m = model == astopo::ModelKind::ba ? 2.0 : 2.11;
  params.p = 0.07;
  params.alpha = 0.5;
  params.seed = 1;
  params.region_weights = model == astopo::ModelKind::geodined
                              ? astopo::default_region_table().weights
                              : std::vector<double>{1.0};
  return params;
}

void BM_GenerateBa(benchmark::State& state) {
  const auto params = base_params(astopo::ModelKind::ba,
                                  static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(astopo::generate(params).graph.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateBa)->Arg(1000)->Arg(5000);

void BM_GenerateDined(benchmark::State& state) {
  const auto params = base_params(astopo::ModelKind::dined,
                                  static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(astopo::generate(params).graph.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateDined)->Arg(1000)->Arg(5000)->Arg(15000);

void BM_GenerateGeoDined(benchmark::State& state) {
  const auto params = base_params(astopo::ModelKind::geodined,
                                  static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(astopo::generate(params).graph.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateGeoDined)->Arg(1000)->Arg(5000)->Arg(15000);

void BM_SamplePreferential(benchmark::State& state) {
  const auto params = base_params(astopo::ModelKind::dined,
                                  static_cast<std::uint32_t>(state.range(0)));
  const astopo::AsGraph graph = astopo::generate(params).graph;
  astopo::Rng rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph.sample_preferential(
        astopo::WeightKind::out_degree, std::nullopt, rng));
  }
}
BENCHMARK(BM_SamplePreferential)->Arg(1000)->Arg(15000);

}  // namespace

BENCHMARK_MAIN();
