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

#include "astopo/regions.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <string_view>

#include "astopo/edge_list.hpp"  // ParseError

namespace astopo {
namespace {

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

void normalize(RegionTable& table, const std::string& source,
               std::size_t line) {
  double total = 0.0;
  for (double w : table.weights) total += w;
  if (!(total > 0.0)) {
    throw ParseError(source, line, "region weights must not all be zero");
  }
  for (double& w : table.weights) w /= total;
}

}  // namespace

RegionTable load_region_table(std::istream& in, const std::string& source) {
  RegionTable table;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(source, line_no, "expected '<name>,<weight>'");
    }
    const std::string_view name = trim(line.substr(0, comma));
    const std::string_view token = trim(line.substr(comma + 1));
    if (name.empty()) {
      throw ParseError(source, line_no, "empty region name");
    }
    double weight = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), weight);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(source, line_no,
                       "malformed weight '" + std::string(token) + "'");
    }
    if (!(weight >= 0.0) || !std::isfinite(weight)) {
      throw ParseError(source, line_no, "weight must be finite and >= 0");
    }
    table.names.emplace_back(name);
    table.weights.push_back(weight);
  }
  if (in.bad()) {
    throw std::runtime_error("read failure on '" + source + "'");
  }
  if (table.names.empty()) {
    throw ParseError(source, line_no, "region file declares no regions");
  }
  normalize(table, source, line_no);
  return table;
}

RegionTable load_region_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return load_region_table(in, path);
}

RegionTable default_region_table() {
  RegionTable table;
  table.names = {"NAFTA", "EMEA", "AP", "Latin America"};
  table.weights = {55.45, 18.53, 8.05, 2.96};
  double named = 0.0;
  for (double w : table.weights) named += w;
  const double misc = (100.0 - named) / 22.0;  // residual split evenly
  for (int i = 1; i <= 22; ++i) {
    char name[16];
    std::snprintf(name, sizeof(name), "Misc-%02d", i);
    table.names.emplace_back(name);
    table.weights.push_back(misc);
  }
  normalize(table, "<builtin>", 0);
  return table;
}

}  // namespace astopo
