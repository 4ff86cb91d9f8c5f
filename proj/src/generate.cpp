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

#include "forge/generate.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forge/rng.hpp"

namespace forge {
namespace {

constexpr int kMaxAttempts = 1000;

Graph sample_once(const GenConfig& cfg, std::uint64_t seed) {
  CounterRng rng(seed, 0x676e6dULL);  // "gnm"
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(cfg.m));
  while (static_cast<long long>(edges.size()) < cfg.m) {
    int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(cfg.n)));
    int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(cfg.n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    double w = cfg.unit_weights ? 1.0 : 1.0 - rng.next_unit();  // (0, 1]
    edges.push_back({u, v, w});
  }
  return Graph(cfg.n, edges, !cfg.unit_weights);
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const Arc& a : g.neighbors(u)) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        ++reached;
        stack.push_back(a.to);
      }
    }
  }
  return reached == g.n();
}

GenResult generate_graph(const GenConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("generate: n must be positive");
  long long max_m = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2;
  if (cfg.m < 0 || cfg.m > max_m) {
    throw std::invalid_argument("generate: m out of range [0, " +
                                std::to_string(max_m) + "]");
  }
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    std::uint64_t seed =
        attempt == 1 ? cfg.seed
                     : CounterRng::derive(cfg.seed,
                                          static_cast<std::uint64_t>(attempt));
    Graph g = sample_once(cfg, seed);
    if (!cfg.require_connected || is_connected(g)) {
      return {std::move(g), attempt};
    }
  }
  throw std::runtime_error(
      "generate: no connected graph after 1000 attempts; "
      "raise m or drop the connectivity requirement");
}

}  // namespace forge
