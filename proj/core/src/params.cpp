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

#include "astopo/params.hpp"

#include <cmath>
#include <stdexcept>

namespace astopo {

std::string to_string(ModelKind model) {
  switch (model) {
    case ModelKind::ba:
      return "ba";
    case ModelKind::ined:
      return "ined";
    case ModelKind::dined:
      return "dined";
    case ModelKind::geodined:
      return "geodined";
  }
  throw std::invalid_argument("to_string: unknown ModelKind");
}

ModelKind model_from_string(const std::string& name) {
  if (name == "ba") return ModelKind::ba;
  if (name == "ined") return ModelKind::ined;
  if (name == "dined") return ModelKind::dined;
  if (name == "geodined") return ModelKind::geodined;
  throw std::invalid_argument("unknown model '" + name +
                              "' (expected ba, ined, dined, or geodined)");
}

void ModelParams::validate() const {
  if (m0 < 3) {
    throw std::invalid_argument("m0 must be >= 3 (seed ring)");
  }
  if (n <= m0) {
    throw std::invalid_argument("n must exceed the seed size m0");
  }
  if (!(m >= 1.0)) {
    throw std::invalid_argument("m must be >= 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (model == ModelKind::ba) {
    if (m != std::floor(m)) {
      throw std::invalid_argument("ba requires integer m");
    }
    if (m > static_cast<double>(m0)) {
      throw std::invalid_argument("ba requires m <= m0");
    }
  }
  if (region_weights.empty()) {
    throw std::invalid_argument("region_weights must be non-empty");
  }
  double total = 0.0;
  for (double w : region_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("region weights must be finite and >= 0");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument("region weights must not all be zero");
  }
}

std::vector<double> ModelParams::normalized_weights() const {
  double total = 0.0;
  for (double w : region_weights) total += w;
  std::vector<double> out;
  out.reserve(region_weights.size());
  for (double w : region_weights) out.push_back(w / total);
  return out;
}

}  // namespace astopo
