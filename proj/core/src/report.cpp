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

#include "astopo/report.hpp"

#include <cmath>
#include <functional>

#include <json.hpp>

namespace astopo {
namespace {

using Json = nlohmann::ordered_json;

const char* degree_kind_name(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::undirected:
      return "undirected";
    case DegreeKind::in:
      return "in";
    case DegreeKind::out:
      return "out";
  }
  return "?";
}

Json header_json(const EdgeListHeader& header) {
  return Json{{"model", to_string(header.model)},
              {"n", header.n},
              {"m", header.m},
              {"p", header.p},
              {"alpha", header.alpha},
              {"seed", header.seed},
              {"regions", header.regions},
              {"generator_version", header.generator_version}};
}

Json fit_json(const PowerLawFit& fit) {
  return Json{{"eta", fit.eta},
              {"gamma", fit.gamma},
              {"k_min", fit.k_min},
              {"k_max", fit.k_max},
              {"points_used", fit.points_used},
              {"r_squared", fit.r_squared}};
}

Json ccdf_section_json(const CcdfSection& section) {
  Json points = Json::array();
  for (const auto& point : section.curve.points) {
    points.push_back(Json::array({point.degree, point.fraction}));
  }
  Json out{{"kind", degree_kind_name(section.curve.kind)},
           {"region", section.curve.region ? Json(*section.curve.region)
                                           : Json(nullptr)},
           {"scope_node_count", section.curve.scope_node_count},
           {"points", std::move(points)}};
  out["fit"] = section.fit ? fit_json(*section.fit) : Json(nullptr);
  return out;
}

Json cores_json(const CoreReport& report) {
  Json cores = Json::array();
  for (const DenseCore& core : report.cores) {
    cores.push_back(Json{
        {"size", core.size()},
        {"density", core.density},
        {"region", core.region ? Json(*core.region) : Json(nullptr)},
        {"members", core.members}});
  }
  return Json{{"density_threshold", report.density_threshold},
              {"min_size", report.min_size},
              {"cores", std::move(cores)}};
}

Json inflation_json(const InflationReport& report) {
  static constexpr const char* kTierNames[] = {"tier1", "tier2", "tier3"};
  Json tiers;
  for (std::size_t i = 0; i < report.tiers.size(); ++i) {
    const TierInflation& t = report.tiers[i];
    tiers[kTierNames[i]] = Json{{"sampled", t.sampled},
                                {"inflated", t.inflated},
                                {"unreachable", t.unreachable},
                                {"inflation_pct", t.inflation_pct}};
  }
  return Json{{"sample_size", report.sample_size},
              {"rng_seed", report.rng_seed},
              {"tiers", std::move(tiers)}};
}

Json theory_json(const TheoryConstants& k, const Prediction& pred) {
  return Json{{"constants",
               Json{{"m", k.m},
                    {"p", k.p},
                    {"A", k.A},
                    {"B", k.B},
                    {"C", k.C},
                    {"D", k.D},
                    {"G", k.G},
                    {"lambda1", k.lambda1},
                    {"lambda2", k.lambda2}}},
              {"prediction",
               Json{{"gamma", pred.gamma},
                    {"eta", pred.eta},
                    {"leaf_fraction", pred.leaf_fraction},
                    {"max_in_degree", pred.max_in_degree},
                    {"max_out_degree", pred.max_out_degree}}}};
}

Json graph_json(const GraphAnalysis& g) {
  Json out{{"source", g.source},
           {"header", header_json(g.header)},
           {"node_count", g.node_count},
           {"edge_count", g.edge_count}};
  if (g.leaves) {
    out["leaves"] = Json{{"count", g.leaves->count},
                         {"fraction", g.leaves->fraction}};
  }
  if (g.symmetric_fraction) out["symmetric_fraction"] = *g.symmetric_fraction;
  if (!g.ccdf_sections.empty()) {
    Json sections = Json::array();
    for (const auto& section : g.ccdf_sections) {
      sections.push_back(ccdf_section_json(section));
    }
    out["ccdf"] = std::move(sections);
  }
  if (g.cores) out["cores"] = cores_json(*g.cores);
  if (g.inflation) out["inflation"] = inflation_json(*g.inflation);
  if (g.theory_constants && g.prediction) {
    out["theory"] = theory_json(*g.theory_constants, *g.prediction);
  }
  return out;
}

// Collects one named scalar from every graph that defines it and records
// its sample mean / standard deviation.
void aggregate_metric(
    AnalysisReport& report, const std::string& name,
    const std::function<std::optional<double>(const GraphAnalysis&)>& pick) {
  std::vector<double> values;
  for (const GraphAnalysis& g : report.graphs) {
    if (const auto v = pick(g)) values.push_back(*v);
  }
  if (values.empty()) return;
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  AggregateStat stat;
  stat.mean = mean;
  stat.stddev = values.size() > 1
                    ? std::sqrt(ss / static_cast<double>(values.size() - 1))
                    : 0.0;
  stat.count = values.size();
  report.aggregates[name] = stat;
}

void fill_aggregates(AnalysisReport& report) {
  using G = GraphAnalysis;
  const auto global_fit = [](const G& g) -> const PowerLawFit* {
    if (g.ccdf_sections.empty() || !g.ccdf_sections.front().fit) {
      return nullptr;
    }
    return &*g.ccdf_sections.front().fit;
  };
  aggregate_metric(report, "leaf_fraction", [](const G& g) {
    return g.leaves ? std::optional<double>(g.leaves->fraction) : std::nullopt;
  });
  aggregate_metric(report, "symmetric_fraction",
                   [](const G& g) { return g.symmetric_fraction; });
  aggregate_metric(report, "eta", [&](const G& g) {
    const auto* fit = global_fit(g);
    return fit ? std::optional<double>(fit->eta) : std::nullopt;
  });
  aggregate_metric(report, "gamma", [&](const G& g) {
    const auto* fit = global_fit(g);
    return fit ? std::optional<double>(fit->gamma) : std::nullopt;
  });
  aggregate_metric(report, "fit_r_squared", [&](const G& g) {
    const auto* fit = global_fit(g);
    return fit ? std::optional<double>(fit->r_squared) : std::nullopt;
  });
  aggregate_metric(report, "core_count", [](const G& g) {
    return g.cores ? std::optional<double>(static_cast<double>(
                         g.cores->cores.size()))
                   : std::nullopt;
  });
  aggregate_metric(report, "largest_core_size", [](const G& g) {
    if (!g.cores) return std::optional<double>();
    return std::optional<double>(
        g.cores->cores.empty()
            ? 0.0
            : static_cast<double>(g.cores->cores.front().size()));
  });
  aggregate_metric(report, "secondary_core_count", [](const G& g) {
    if (!g.cores) return std::optional<double>();
    const std::size_t n = g.cores->cores.size();
    return std::optional<double>(n > 1 ? static_cast<double>(n - 1) : 0.0);
  });
  aggregate_metric(report, "secondary_regional_fraction", [](const G& g) {
    if (!g.cores || g.cores->cores.size() < 2) return std::optional<double>();
    std::size_t regional = 0;
    for (std::size_t i = 1; i < g.cores->cores.size(); ++i) {
      if (g.cores->cores[i].region) ++regional;
    }
    return std::optional<double>(static_cast<double>(regional) /
                                 static_cast<double>(g.cores->cores.size() - 1));
  });
  static constexpr const char* kTierMetric[] = {
      "inflation_pct_tier1", "inflation_pct_tier2", "inflation_pct_tier3"};
  for (std::size_t i = 0; i < 3; ++i) {
    aggregate_metric(report, kTierMetric[i], [i](const G& g) {
      if (!g.inflation || g.inflation->tiers[i].sampled == 0) {
        return std::optional<double>();
      }
      return std::optional<double>(g.inflation->tiers[i].inflation_pct);
    });
  }
}

}  // namespace

GraphAnalysis analyze_graph(const std::string& source, const EdgeListFile& file,
                            const AnalysisSettings& settings) {
  const AsGraph& graph = file.graph;
  GraphAnalysis out;
  out.source = source;
  out.header = file.header;
  out.node_count = graph.node_count();
  out.edge_count = graph.edge_count();

  if (settings.leaves) out.leaves = count_leaves(graph);
  if (settings.symmetric && graph.edge_count() > 0) {
    out.symmetric_fraction = symmetric_fraction(graph);
  }
  if (settings.ccdf && graph.node_count() > 0) {
    const auto add_section = [&](std::optional<std::uint32_t> region) {
      CcdfSection section;
      section.curve = ccdf(graph, DegreeKind::undirected, region);
      try {
        section.fit = fit_power_law(section.curve);
      } catch (const std::invalid_argument&) {
        // Scope too small for a meaningful fit; keep the raw curve.
      }
      out.ccdf_sections.push_back(std::move(section));
    };
    add_section(std::nullopt);
    if (graph.region_count() > 1) {
      std::vector<std::uint64_t> population(graph.region_count(), 0);
      for (const NodeRecord& node : graph.nodes()) ++population[node.region];
      for (std::uint32_t r = 0; r < graph.region_count(); ++r) {
        if (population[r] > 0) add_section(r);
      }
    }
  }
  if (settings.cores) {
    out.cores = find_dense_cores(graph, settings.core_threshold,
                                 settings.min_core_size);
  }
  if (settings.inflation && graph.node_count() > 0) {
    const TierAssignment tiers = classify_tiers(graph);
    Rng rng(settings.inflation_seed);
    out.inflation =
        path_inflation(graph, tiers, settings.inflation_samples, rng);
  }
  if (out.header.m > 1.0) {
    out.theory_constants = constants(out.header.m, out.header.p);
    out.prediction = predict(out.header.m, out.header.p,
                             static_cast<double>(graph.node_count()));
  }
  return out;
}

AnalysisReport analyze_files(const std::vector<std::string>& paths,
                             const AnalysisSettings& settings) {
  AnalysisReport report;
  report.settings = settings;
  report.graphs.reserve(paths.size());
  for (const std::string& path : paths) {
    const EdgeListFile file = read_edge_list_file(path);
    report.graphs.push_back(analyze_graph(path, file, settings));
  }
  if (report.graphs.size() > 1) fill_aggregates(report);
  return report;
}

std::string to_json_string(const AnalysisReport& report) {
  Json graphs = Json::array();
  for (const GraphAnalysis& g : report.graphs) graphs.push_back(graph_json(g));

  Json settings{{"leaves", report.settings.leaves},
                {"symmetric", report.settings.symmetric},
                {"ccdf", report.settings.ccdf},
                {"cores", report.settings.cores},
                {"inflation", report.settings.inflation},
                {"core_threshold", report.settings.core_threshold},
                {"min_core_size", report.settings.min_core_size},
                {"inflation_samples", report.settings.inflation_samples},
                {"inflation_seed", report.settings.inflation_seed}};

  Json aggregates;
  for (const auto& [name, stat] : report.aggregates) {
    aggregates[name] = Json{
        {"mean", stat.mean}, {"stddev", stat.stddev}, {"count", stat.count}};
  }

  Json out{{"settings", std::move(settings)}, {"graphs", std::move(graphs)}};
  if (!report.aggregates.empty()) out["aggregates"] = std::move(aggregates);
  return out.dump(2) + "\n";
}

std::string to_json_string(const TheoryConstants& constants,
                           const Prediction& prediction,
                           std::optional<double> horizon) {
  Json out = theory_json(constants, prediction);
  // Max-degree predictions only mean something against a growth horizon.
  out["prediction"]["horizon"] = horizon ? Json(*horizon) : Json(nullptr);
  if (!horizon) {
    out["prediction"]["max_in_degree"] = nullptr;
    out["prediction"]["max_out_degree"] = nullptr;
  }
  return out.dump(2) + "\n";
}

}  // namespace astopo
