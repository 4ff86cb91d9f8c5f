// Copyright 2026 The Emulator Forge Authors
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

#ifndef FORGE_GENERATE_HPP_
#define FORGE_GENERATE_HPP_

#include <cstdint>

#include "forge/graph.hpp"

namespace forge {

struct GenConfig {
  int n = 100;
  long long m = 300;
  bool unit_weights = false;  // otherwise uniform (0, 1]
  bool require_connected = true;
  std::uint64_t seed = 0;
};

struct GenResult {
  Graph graph;
  int attempts = 1;  // connectivity resamples, each on a derived seed
};

// G(n, m) with m distinct edges drawn uniformly. Deterministic in the
// seed; gives up after 1000 disconnected attempts.
GenResult generate_graph(const GenConfig& cfg);

bool is_connected(const Graph& g);

}  // namespace forge

#endif  // FORGE_GENERATE_HPP_
