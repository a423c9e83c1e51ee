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

#ifndef ASTOPO_REPORT_HPP_
#define ASTOPO_REPORT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "astopo/analysis.hpp"
#include "astopo/edge_list.hpp"
#include "astopo/routing.hpp"
#include "astopo/theory.hpp"

namespace astopo {

// Which measurements to run, and their knobs.
struct AnalysisSettings {
  bool leaves = false;
  bool symmetric = false;
  bool ccdf = false;
  bool cores = false;
  bool inflation = false;

  double core_threshold = 0.70;
  std::size_t min_core_size = 7;
  std::uint64_t inflation_samples = 1000;
  std::uint64_t inflation_seed = 1;

  bool any() const { return leaves || symmetric || ccdf || cores || inflation; }
  static AnalysisSettings all() {
    AnalysisSettings s;
    s.leaves = s.symmetric = s.ccdf = s.cores = s.inflation = true;
    return s;
  }
};

// A degree distribution together with its fit, when one is computable
// (small scopes can lack the five distinct degrees a fit needs).
struct CcdfSection {
  CcdfCurve curve;
  std::optional<PowerLawFit> fit;
};

// Every measurement taken from one graph file.  `source` and the header
// echo identify exactly which graph and seed each number came from.
struct GraphAnalysis {
  std::string source;
  EdgeListHeader header;
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;

  std::optional<LeafStats> leaves;
  std::optional<double> symmetric_fraction;
  std::vector<CcdfSection> ccdf_sections;  // global first, then per region
  std::optional<CoreReport> cores;
  std::optional<InflationReport> inflation;
  std::optional<TheoryConstants> theory_constants;  // absent when m <= 1
  std::optional<Prediction> prediction;
};

// Sample mean / standard deviation of one scalar metric across the graphs
// that reported it.
struct AggregateStat {
  double mean = 0.0;
  double stddev = 0.0;
  std::uint64_t count = 0;
};

struct AnalysisReport {
  AnalysisSettings settings;
  std::vector<GraphAnalysis> graphs;
  // Keyed by metric name ("leaf_fraction", "eta", ...); filled only for
  // multi-graph reports.
  std::map<std::string, AggregateStat> aggregates;
};

// Runs the requested measurements on one loaded graph.
GraphAnalysis analyze_graph(const std::string& source, const EdgeListFile& file,
                            const AnalysisSettings& settings);

// Loads every path, analyzes each, and aggregates scalar metrics when more
// than one graph is given.  Propagates ParseError from unreadable inputs.
AnalysisReport analyze_files(const std::vector<std::string>& paths,
                             const AnalysisSettings& settings);

// JSON renderings (reports are consumed by downstream plotting tools).
std::string to_json_string(const AnalysisReport& report);
std::string to_json_string(const TheoryConstants& constants,
                           const Prediction& prediction,
                           std::optional<double> horizon);

}  // namespace astopo

#endif  // ASTOPO_REPORT_HPP_
