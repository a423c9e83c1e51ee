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

#ifndef ASTOPO_PARAMS_HPP_
#define ASTOPO_PARAMS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace astopo {

// The four generative models, in increasing order of fidelity to the
// customer/provider/peer structure of the inter-domain graph.
enum class ModelKind {
  ba,        // undirected preferential attachment, integer m
  ined,      // undirected growth with internal edge addition, fractional m
  dined,     // directed customer->provider growth with symmetric peering
  geodined,  // dined plus geographic regions and tunable edge locality
};

std::string to_string(ModelKind model);

// Parses "ba" / "ined" / "dined" / "geodined"; throws std::invalid_argument
// on anything else.
ModelKind model_from_string(const std::string& name);

// Full parameter set for one generation run.  `m` is the expected number of
// edge arrangements added per new node and may be fractional except under
// `ba`.  `p` is the probability that an arrangement is symmetric (a peering
// pair of anti-parallel edges).  `alpha` is the probability that each
// internal arrangement is constrained to the new node's region; it is only
// consulted by `geodined`.  `region_weights` are relative (they need not sum
// to 1) and are only consulted by `geodined`.
struct ModelParams {
  ModelKind model = ModelKind::geodined;
  std::uint32_t n = 15000;  // total node count, seed nodes included
  double m = 2.11;
  double p = 0.07;
  double alpha = 0.5;
  std::vector<double> region_weights = {1.0};
  std::uint32_t m0 = 5;  // seed ring size
  std::uint64_t seed = 1;

  // Throws std::invalid_argument with a descriptive message when any field
  // is out of range.  Called by the generator before doing any work.
  void validate() const;

  // Region weights rescaled to sum to exactly 1.  Requires validate().
  std::vector<double> normalized_weights() const;
};

}  // namespace astopo

#endif  // ASTOPO_PARAMS_HPP_
