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

#ifndef ASTOPO_EDGE_LIST_HPP_
#define ASTOPO_EDGE_LIST_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "astopo/graph.hpp"
#include "astopo/params.hpp"

namespace astopo {

// Parse failure in an edge-list or region file; remembers where.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " +
                           message),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Generation metadata carried in the edge-list header.  `regions` is the
// declared region count (which may exceed the largest label in use, so
// empty regions survive a round trip).
struct EdgeListHeader {
  ModelKind model = ModelKind::geodined;
  std::uint64_t n = 0;
  double m = 0.0;
  double p = 0.0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::uint32_t regions = 1;
  std::string generator_version;

  friend bool operator==(const EdgeListHeader&,
                         const EdgeListHeader&) = default;
};

struct EdgeListFile {
  EdgeListHeader header;
  AsGraph graph;
};

// Builds the header describing a generation run.
EdgeListHeader make_header(const ModelParams& params);

// Text format, three ordered sections:
//   # key=value          one line per header field
//   N <id> <region>      one line per node, ids ascending 0..n-1
//   E <customer> <provider>   one line per directed edge
// A symmetric arrangement appears as its two directed lines.
void write_edge_list(std::ostream& out, const AsGraph& graph,
                     const EdgeListHeader& header);
void write_edge_list_file(const std::string& path, const AsGraph& graph,
                          const EdgeListHeader& header);

// Strict parse: section order enforced, ids dense and ascending, region
// labels below the declared count, no duplicate edges or self-loops.
// The keys model, n, and regions are required; the rest default to zero /
// empty.  Unknown keys, malformed numbers, or count mismatches raise
// ParseError with the offending line.  Degree semantics follow the model
// key (ba / ined graphs are undirected encodings).
EdgeListFile read_edge_list(std::istream& in, const std::string& source);
EdgeListFile read_edge_list_file(const std::string& path);

}  // namespace astopo

#endif  // ASTOPO_EDGE_LIST_HPP_
