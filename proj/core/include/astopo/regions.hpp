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

#ifndef ASTOPO_REGIONS_HPP_
#define ASTOPO_REGIONS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace astopo {

// Named region weights.  Weights are normalized to sum to 1 on load, so
// input files may use percentages or any other relative scale.
struct RegionTable {
  std::vector<std::string> names;
  std::vector<double> weights;

  std::size_t size() const { return names.size(); }
};

// CSV-ish format, one region per line: <name>,<weight>.  Blank lines and
// lines starting with '#' are skipped.  Weights must be nonnegative with a
// positive total; violations raise ParseError with the line number.
RegionTable load_region_table(std::istream& in, const std::string& source);
RegionTable load_region_table_file(const std::string& path);

// The built-in world partition used when no region file is given: four
// continental markets (NAFTA 55.45, EMEA 18.53, AP 8.05, Latin America
// 2.96, as percentages) plus 22 miscellaneous country regions sharing the
// remaining 15.01% evenly.
RegionTable default_region_table();

}  // namespace astopo

#endif  // ASTOPO_REGIONS_HPP_
