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

// Command-line front end: `generate` grows synthetic AS graphs to edge-list
// files, `analyze` measures them into a JSON report, and `predict` prints
// the closed-form expectations for a parameter set.
//
// Exit codes: 0 success, 1 usage error, 2 data error (unreadable or
// malformed input, unwritable output).

#include <glob.h>

#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "astopo/edge_list.hpp"
#include "astopo/generate.hpp"
#include "astopo/params.hpp"
#include "astopo/regions.hpp"
#include "astopo/report.hpp"
#include "astopo/theory.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct GenerateFlags {
  std::string model;
  std::uint32_t nodes = 15000;
  double m = 2.11;
  double p = 0.07;
  double alpha = 0.5;
  std::string regions_path;
  std::uint64_t seed = 1;
  std::uint32_t runs = 1;
  std::string out;
};

struct AnalyzeFlags {
  std::vector<std::string> graphs;
  bool all = false;
  astopo::AnalysisSettings settings;
  std::string out;
};

struct PredictFlags {
  double m = 0.0;
  double p = 0.0;
  std::optional<double> nodes;
};

// "g.el" with run 3 becomes "g.3.el"; a name without an extension gets the
// index appended.  Only used for multi-run invocations.
std::string run_path(const std::string& out, std::uint32_t run) {
  const std::size_t slash = out.find_last_of('/');
  const std::size_t dot = out.find_last_of('.');
  const std::string index = std::to_string(run);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out + "." + index;
  }
  return out.substr(0, dot) + "." + index + out.substr(dot);
}

// Expands one --graph argument with glob(3); a pattern with no matches is
// kept verbatim so the resulting open error names it.
std::vector<std::string> expand_glob(const std::string& pattern) {
  glob_t results;
  const int rc = glob(pattern.c_str(), 0, nullptr, &results);
  std::vector<std::string> paths;
  if (rc == 0) {
    for (std::size_t i = 0; i < results.gl_pathc; ++i) {
      paths.emplace_back(results.gl_pathv[i]);
    }
  } else {
    paths.push_back(pattern);
  }
  globfree(&results);
  return paths;
}

int cmd_generate(const GenerateFlags& flags) {
  astopo::ModelParams params;
  params.model = astopo::model_from_string(flags.model);
  params.n = flags.nodes;
  params.m = flags.m;
  params.p = flags.p;
  params.alpha = flags.alpha;
  params.seed = flags.seed;
  if (params.model == astopo::ModelKind::geodined) {
    const astopo::RegionTable table =
        flags.regions_path.empty()
            ? astopo::default_region_table()
            : astopo::load_region_table_file(flags.regions_path);
    params.region_weights = table.weights;
  } else if (!flags.regions_path.empty()) {
    std::cerr << "note: --regions is only used by geodined; ignored\n";
  }
  params.validate();

  const auto produce = [&params](std::uint32_t run,
                                 const std::string& path) -> std::string {
    astopo::ModelParams p = params;
    p.seed = params.seed + run;
    const astopo::GenerationResult result = astopo::generate(p);
    astopo::write_edge_list_file(path, result.graph, astopo::make_header(p));
    return path;
  };

  if (flags.runs == 1) {
    std::cout << produce(0, flags.out) << '\n';
    return 0;
  }
  // Independent runs in parallel workers, each with its own seed and file.
  std::vector<std::future<std::string>> jobs;
  jobs.reserve(flags.runs);
  for (std::uint32_t run = 0; run < flags.runs; ++run) {
    jobs.push_back(std::async(std::launch::async, produce, run,
                              run_path(flags.out, run)));
  }
  for (auto& job : jobs) std::cout << job.get() << '\n';
  return 0;
}

int cmd_analyze(AnalyzeFlags& flags) {
  if (flags.all) flags.settings = [&] {
    astopo::AnalysisSettings s = astopo::AnalysisSettings::all();
    s.core_threshold = flags.settings.core_threshold;
    s.min_core_size = flags.settings.min_core_size;
    s.inflation_samples = flags.settings.inflation_samples;
    s.inflation_seed = flags.settings.inflation_seed;
    return s;
  }();
  if (!flags.settings.any()) {
    std::cerr << "error: no analysis sections requested (pass --all or any "
                 "of --leaves --symmetric --ccdf --cores --inflation)\n";
    return kExitUsage;
  }

  std::vector<std::string> paths;
  for (const std::string& pattern : flags.graphs) {
    for (std::string& path : expand_glob(pattern)) {
      paths.push_back(std::move(path));
    }
  }

  const astopo::AnalysisReport report =
      astopo::analyze_files(paths, flags.settings);
  const std::string json = astopo::to_json_string(report);
  if (flags.out.empty()) {
    std::cout << json;
    return 0;
  }
  std::ofstream out(flags.out);
  out << json;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write '" << flags.out << "'\n";
    return kExitData;
  }
  return 0;
}

int cmd_predict(const PredictFlags& flags) {
  const astopo::TheoryConstants k = astopo::constants(flags.m, flags.p);
  const astopo::Prediction pred =
      astopo::predict(flags.m, flags.p, flags.nodes.value_or(1.0));
  std::cout << astopo::to_json_string(k, pred, flags.nodes);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic Internet AS-graph generation and analysis"};
  app.require_subcommand(1);

  GenerateFlags gen;
  CLI::App* generate =
      app.add_subcommand("generate", "Grow graphs into edge-list files");
  generate->add_option("--model", gen.model, "ba, ined, dined, or geodined")
      ->required();
  generate->add_option("--nodes", gen.nodes, "Total node count")
      ->capture_default_str();
  generate->add_option("--m", gen.m, "Mean arrangements per step")
      ->capture_default_str();
  generate->add_option("--p", gen.p, "Symmetric-arrangement probability")
      ->capture_default_str();
  generate->add_option("--alpha", gen.alpha, "Edge locality (geodined)")
      ->capture_default_str();
  generate->add_option("--regions", gen.regions_path,
                       "Region weight file (default: built-in world table)");
  generate->add_option("--seed", gen.seed, "Base RNG seed; run r uses seed+r")
      ->capture_default_str();
  generate->add_option("--runs", gen.runs, "Ensemble size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  generate->add_option("--out", gen.out, "Output path (run index inserted "
                                         "before the extension when runs > 1)")
      ->required();

  AnalyzeFlags ana;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Measure edge-list files into JSON");
  analyze->add_option("--graph", ana.graphs, "Edge-list file or glob")
      ->required()
      ->expected(-1);
  analyze->add_flag("--all", ana.all, "All sections");
  analyze->add_flag("--leaves", ana.settings.leaves, "Leaf statistics");
  analyze->add_flag("--symmetric", ana.settings.symmetric,
                    "Symmetric-arrangement fraction");
  analyze->add_flag("--ccdf", ana.settings.ccdf,
                    "Degree CCDFs and power-law fits");
  analyze->add_flag("--cores", ana.settings.cores, "Dense-core extraction");
  analyze->add_flag("--inflation", ana.settings.inflation,
                    "No-valley path inflation");
  analyze->add_option("--threshold", ana.settings.core_threshold,
                      "Core density threshold")
      ->capture_default_str();
  analyze->add_option("--min-core-size", ana.settings.min_core_size,
                      "Smallest reportable core")
      ->capture_default_str();
  analyze->add_option("--inflation-samples", ana.settings.inflation_samples,
                      "Sampled source nodes per tier")
      ->capture_default_str();
  analyze->add_option("--inflation-seed", ana.settings.inflation_seed,
                      "Pair-sampling RNG seed")
      ->capture_default_str();
  analyze->add_option("--out", ana.out, "Report path (default: stdout)");

  PredictFlags pre;
  CLI::App* predict =
      app.add_subcommand("predict", "Print closed-form expectations");
  predict->add_option("--m", pre.m, "Mean arrangements per step")->required();
  predict->add_option("--p", pre.p, "Symmetric-arrangement probability")
      ->required();
  predict->add_option("--nodes", pre.nodes,
                      "Horizon for max-degree predictions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;  // help/version exit clean
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (analyze->parsed()) return cmd_analyze(ana);
    if (predict->parsed()) return cmd_predict(pre);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
