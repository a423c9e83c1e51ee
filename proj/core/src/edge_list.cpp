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

#include "astopo/edge_list.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "astopo/version.hpp"

namespace astopo {
namespace {

// Shortest decimal that parses back to the same double.
std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

template <typename T>
T parse_number(std::string_view token, const std::string& source,
               std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(source, line,
                     std::string("malformed ") + what + " '" +
                         std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ') ++end;
    if (end > pos) fields.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

}  // namespace

EdgeListHeader make_header(const ModelParams& params) {
  EdgeListHeader header;
  header.model = params.model;
  header.n = params.n;
  header.m = params.m;
  header.p = params.p;
  header.alpha = params.alpha;
  header.seed = params.seed;
  header.regions = params.model == ModelKind::geodined
                       ? static_cast<std::uint32_t>(params.region_weights.size())
                       : 1;
  header.generator_version = kGeneratorVersion;
  return header;
}

void write_edge_list(std::ostream& out, const AsGraph& graph,
                     const EdgeListHeader& header) {
  if (header.n != graph.node_count()) {
    throw std::invalid_argument("write_edge_list: header.n != node count");
  }
  if (header.regions != graph.region_count()) {
    throw std::invalid_argument(
        "write_edge_list: header.regions != graph region count");
  }
  out << "# model=" << to_string(header.model) << '\n';
  out << "# n=" << header.n << '\n';
  out << "# m=" << format_double(header.m) << '\n';
  out << "# p=" << format_double(header.p) << '\n';
  out << "# alpha=" << format_double(header.alpha) << '\n';
  out << "# seed=" << header.seed << '\n';
  out << "# regions=" << header.regions << '\n';
  out << "# generator-version=" << header.generator_version << '\n';
  for (const NodeRecord& node : graph.nodes()) {
    out << "N " << node.id << ' ' << node.region << '\n';
  }
  for (const auto& [customer, provider] : graph.edges()) {
    out << "E " << customer << ' ' << provider << '\n';
  }
}

void write_edge_list_file(const std::string& path, const AsGraph& graph,
                          const EdgeListHeader& header) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  write_edge_list(out, graph, header);
  out.flush();
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

EdgeListFile read_edge_list(std::istream& in, const std::string& source) {
  EdgeListHeader header;
  header.regions = 0;
  bool saw_model = false, saw_n = false, saw_regions = false;

  enum class Section { header, nodes, edges };
  Section section = Section::header;
  std::optional<AsGraph> graph;
  NodeId next_node = 0;

  // Nodes and edges may only be ingested once all three required keys are
  // known, because they fix the graph's shape and semantics.
  const auto begin_nodes = [&](std::size_t line) {
    if (!saw_model || !saw_n || !saw_regions) {
      throw ParseError(source, line,
                       "node section before required header keys "
                       "(model, n, regions)");
    }
    const DegreeSemantics semantics =
        header.model == ModelKind::ba || header.model == ModelKind::ined
            ? DegreeSemantics::undirected
            : DegreeSemantics::directed;
    graph.emplace(header.regions, semantics);
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '#') {
      if (section != Section::header) {
        throw ParseError(source, line_no, "header line after data section");
      }
      const std::string_view body = trim(line.substr(1));
      const std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError(source, line_no, "header line without key=value");
      }
      const std::string key(trim(body.substr(0, eq)));
      const std::string_view value = trim(body.substr(eq + 1));
      if (key == "model") {
        try {
          header.model = model_from_string(std::string(value));
        } catch (const std::invalid_argument& err) {
          throw ParseError(source, line_no, err.what());
        }
        saw_model = true;
      } else if (key == "n") {
        header.n = parse_number<std::uint64_t>(value, source, line_no, "n");
        saw_n = true;
      } else if (key == "m") {
        header.m = parse_number<double>(value, source, line_no, "m");
      } else if (key == "p") {
        header.p = parse_number<double>(value, source, line_no, "p");
      } else if (key == "alpha") {
        header.alpha = parse_number<double>(value, source, line_no, "alpha");
      } else if (key == "seed") {
        header.seed =
            parse_number<std::uint64_t>(value, source, line_no, "seed");
      } else if (key == "regions") {
        header.regions =
            parse_number<std::uint32_t>(value, source, line_no, "regions");
        if (header.regions == 0) {
          throw ParseError(source, line_no, "regions must be >= 1");
        }
        saw_regions = true;
      } else if (key == "generator-version") {
        header.generator_version = std::string(value);
      } else {
        throw ParseError(source, line_no, "unknown header key '" + key + "'");
      }
      continue;
    }

    const auto fields = split_fields(line);
    if (fields[0] == "N") {
      if (section == Section::edges) {
        throw ParseError(source, line_no, "node line after edge section");
      }
      if (section == Section::header) {
        begin_nodes(line_no);
        section = Section::nodes;
      }
      if (fields.size() != 3) {
        throw ParseError(source, line_no, "expected 'N <id> <region>'");
      }
      const auto id = parse_number<NodeId>(fields[1], source, line_no, "id");
      const auto region =
          parse_number<std::uint32_t>(fields[2], source, line_no, "region");
      if (id != next_node) {
        throw ParseError(source, line_no,
                         "node ids must be dense and ascending (expected " +
                             std::to_string(next_node) + ")");
      }
      if (id >= header.n) {
        throw ParseError(source, line_no, "more nodes than header n");
      }
      if (region >= header.regions) {
        throw ParseError(source, line_no, "region label out of range");
      }
      graph->add_node(region);
      ++next_node;
    } else if (fields[0] == "E") {
      if (section == Section::header) {
        throw ParseError(source, line_no, "edge line before node section");
      }
      section = Section::edges;
      if (fields.size() != 3) {
        throw ParseError(source, line_no,
                         "expected 'E <customer> <provider>'");
      }
      const auto customer =
          parse_number<NodeId>(fields[1], source, line_no, "customer id");
      const auto provider =
          parse_number<NodeId>(fields[2], source, line_no, "provider id");
      if (customer >= next_node || provider >= next_node) {
        throw ParseError(source, line_no, "edge references unknown node");
      }
      if (customer == provider) {
        throw ParseError(source, line_no, "self-loop edge");
      }
      if (!graph->add_edge(customer, provider)) {
        throw ParseError(source, line_no, "duplicate edge");
      }
    } else {
      throw ParseError(source, line_no,
                       "unrecognized line (expected '#', 'N', or 'E')");
    }
  }
  if (in.bad()) {
    throw std::runtime_error("read failure on '" + source + "'");
  }
  if (section == Section::header) {
    throw ParseError(source, line_no, "file has no node section");
  }
  if (next_node != header.n) {
    throw ParseError(source, line_no,
                     "node count " + std::to_string(next_node) +
                         " does not match header n=" +
                         std::to_string(header.n));
  }
  return EdgeListFile{header, std::move(*graph)};
}

EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return read_edge_list(in, path);
}

}  // namespace astopo
