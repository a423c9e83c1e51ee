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

#ifndef ASTOPO_VERSION_HPP_
#define ASTOPO_VERSION_HPP_

namespace astopo {

// Stamped into every edge-list header.  Bump whenever the RNG, the draw
// order, or any model rule changes in a way that alters generated graphs
// for a fixed seed.
inline constexpr char kGeneratorVersion[] = "1";

inline constexpr char kLibraryVersion[] = "1.0.0";

}  // namespace astopo

#endif  // ASTOPO_VERSION_HPP_
