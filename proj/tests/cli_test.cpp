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
// End-to-end checks of the installed command-line binary.  Invoked as
//   astopo_cli_tests <path-to-astopo-binary> <path-to-data-dir>

#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::string g_binary;
std::string g_data_dir;
fs::path g_workspace;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout
  std::string errors;  // stderr
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  const fs::path out_file = g_workspace / "stdout.txt";
  const fs::path err_file = g_workspace / "stderr.txt";
  const std::string command = "'" + g_binary + "' " + args + " > '" +
                              out_file.string() + "' 2> '" +
                              err_file.string() + "'";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = slurp(out_file);
  result.errors = slurp(err_file);
  return result;
}

std::string q(const fs::path& path) { return "'" + path.string() + "'"; }

std::size_t count_prefix_lines(const fs::path& path,
                               const std::string& prefix) {
  std::ifstream in(path);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) ++count;
  }
  return count;
}

TEST_CASE("generate writes one well-formed edge list per run") {
  const fs::path out = g_workspace / "g.el";
  const RunResult result = run(
      "generate --model geodined --nodes 500 --m 2.11 --p 0.07 --alpha 0.5 "
      "--regions " +
      q(fs::path(g_data_dir) / "world_regions.csv") + " --seed 1 --out " +
      q(out));
  REQUIRE(result.exit_code == 0);
  REQUIRE(fs::exists(out));
  CHECK(count_prefix_lines(out, "N ") == 500);
  CHECK(count_prefix_lines(out, "# model=geodined") == 1);
  CHECK(count_prefix_lines(out, "# regions=26") == 1);
}

TEST_CASE("ensemble runs write indexed files seeded seed plus run") {
  const fs::path base = g_workspace / "ens.el";
  const RunResult ensemble = run(
      "generate --model dined --nodes 300 --m 2.0 --p 0.1 --seed 10 "
      "--runs 3 --out " +
      q(base));
  REQUIRE(ensemble.exit_code == 0);
  const fs::path run2 = g_workspace / "ens.2.el";
  REQUIRE(fs::exists(g_workspace / "ens.0.el"));
  REQUIRE(fs::exists(g_workspace / "ens.1.el"));
  REQUIRE(fs::exists(run2));
  CHECK(slurp(g_workspace / "ens.0.el") != slurp(run2));

  const fs::path solo = g_workspace / "solo.el";
  const RunResult single = run(
      "generate --model dined --nodes 300 --m 2.0 --p 0.1 --seed 12 "
      "--out " +
      q(solo));
  REQUIRE(single.exit_code == 0);
  CHECK(slurp(solo) == slurp(run2));
}

TEST_CASE("generate rejects fractional m for the ba model") {
  const RunResult result =
      run("generate --model ba --nodes 100 --m 2.5 --out " +
          q(g_workspace / "bad.el"));
  CHECK(result.exit_code == 1);
  CHECK(result.errors.find("integer") != std::string::npos);
}

TEST_CASE("analyze reports a hand-written symmetric arrangement") {
  const fs::path file = g_workspace / "hand.el";
  std::ofstream(file) << "# model=dined\n# n=3\n# regions=1\n"
                      << "N 0 0\nN 1 0\nN 2 0\n"
                      << "E 0 1\nE 1 0\nE 1 2\n";
  const RunResult result = run("analyze --graph " + q(file) + " --symmetric");
  REQUIRE(result.exit_code == 0);
  const Json report = Json::parse(result.output);
  CHECK(report["graphs"][0]["symmetric_fraction"].get<double>() ==
        doctest::Approx(0.5));
}

TEST_CASE("analyze fails with the line number of a corrupt edge") {
  const fs::path file = g_workspace / "corrupt.el";
  std::ofstream(file) << "# model=dined\n# n=2\n# regions=1\n"
                      << "N 0 0\nN 1 0\n"
                      << "E 0 oops\n";
  const RunResult result = run("analyze --graph " + q(file) + " --leaves");
  CHECK(result.exit_code == 2);
  CHECK(result.errors.find(":6:") != std::string::npos);
}

TEST_CASE("analyze requires at least one section") {
  const fs::path file = g_workspace / "g.el";
  const RunResult result = run("analyze --graph " + q(file));
  CHECK(result.exit_code == 1);
}

TEST_CASE("analyze expands globs and aggregates across runs") {
  const RunResult result = run("analyze --graph " +
                               q(g_workspace / "ens.*.el") +
                               " --leaves --symmetric");
  REQUIRE(result.exit_code == 0);
  const Json report = Json::parse(result.output);
  REQUIRE(report["graphs"].size() == 3);
  CHECK(report["aggregates"]["leaf_fraction"]["count"].get<int>() == 3);
  CHECK(report["aggregates"]["leaf_fraction"]["mean"].get<double>() > 0.0);
}

TEST_CASE("analyze --all writes every section to a report file") {
  const fs::path report_path = g_workspace / "report.json";
  const RunResult result = run("analyze --graph " + q(g_workspace / "g.el") +
                               " --all --out " + q(report_path));
  REQUIRE(result.exit_code == 0);
  const Json report = Json::parse(slurp(report_path));
  const Json& graph = report["graphs"][0];
  CHECK(graph.contains("leaves"));
  CHECK(graph.contains("symmetric_fraction"));
  CHECK(graph.contains("ccdf"));
  CHECK(graph.contains("cores"));
  CHECK(graph.contains("inflation"));
  CHECK(graph.contains("theory"));
  CHECK(graph["header"]["model"] == "geodined");
}

TEST_CASE("predict prints the closed-form constants") {
  const RunResult result = run("predict --m 2.11 --p 0.07 --nodes 15000");
  REQUIRE(result.exit_code == 0);
  const Json report = Json::parse(result.output);
  CHECK(report["prediction"]["gamma"].get<double>() ==
        doctest::Approx(2.3737).epsilon(1e-3));
  CHECK(report["prediction"]["leaf_fraction"].get<double>() ==
        doctest::Approx(0.4807).epsilon(1e-3));
  CHECK(report["constants"]["lambda1"].get<double>() ==
        doctest::Approx(0.72795).epsilon(1e-4));
  CHECK(report["prediction"]["max_in_degree"].get<double>() ==
        doctest::Approx(793.147).epsilon(1e-4));

  const RunResult invalid = run("predict --m 1 --p 0");
  CHECK(invalid.exit_code == 1);
}

TEST_CASE("missing input files exit with a data error") {
  const RunResult result =
      run("analyze --graph " + q(g_workspace / "absent.el") + " --leaves");
  CHECK(result.exit_code == 2);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr,
                 "usage: %s <astopo-binary> <data-dir> [doctest args]\n",
                 argv[0]);
    return 1;
  }
  g_binary = argv[1];
  g_data_dir = argv[2];
  g_workspace = fs::temp_directory_path() /
                ("astopo_cli_" + std::to_string(::getpid()));
  fs::remove_all(g_workspace);
  fs::create_directories(g_workspace);

  doctest::Context context;
  context.applyCommandLine(argc - 2, argv + 2);
  const int failures = context.run();
  fs::remove_all(g_workspace);
  return failures;
}
