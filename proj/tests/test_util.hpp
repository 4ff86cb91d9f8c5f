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

#ifndef FORGE_TESTS_TEST_UTIL_HPP_
#define FORGE_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <set>
#include <vector>

#include "forge/graph.hpp"
#include "forge/rng.hpp"

namespace forge::testutil {

// Random graph on a spanning chain, so it is almost always connected.
inline Graph random_graph(std::uint64_t seed, int n, int m, bool weighted) {
  CounterRng rng(seed, 0);
  std::set<std::pair<int, int>> used;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.next_below(v));
    used.insert(std::minmax(u, v));
    edges.push_back({u, v, weighted ? 0.05 + rng.next_unit() : 1.0});
  }
  while (static_cast<int>(edges.size()) < m) {
    int u = static_cast<int>(rng.next_below(n));
    int v = static_cast<int>(rng.next_below(n));
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!used.insert(key).second) continue;
    edges.push_back(
        {key.first, key.second, weighted ? 0.05 + rng.next_unit() : 1.0});
  }
  return Graph(n, std::move(edges), weighted);
}

}  // namespace forge::testutil

#endif  // FORGE_TESTS_TEST_UTIL_HPP_
