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

#ifndef FORGE_SHORTEST_PATHS_HPP_
#define FORGE_SHORTEST_PATHS_HPP_

#include <span>
#include <utility>
#include <vector>

#include "forge/graph.hpp"

namespace forge {

struct SsspResult {
  std::vector<double> dist;    // kInf where unreachable
  std::vector<int> parent;     // -1 at the source and unreachable vertices
};

// Dijkstra from `source`. Ties in the priority queue break toward the
// smaller vertex id, and among equal-length relaxations the smaller parent
// id wins, so the tree is deterministic.
//
// If `edge_levels` is non-empty, only edges with level <= level_cap
// participate.
SsspResult sssp(const Graph& g, int source,
                std::span<const int> edge_levels = {},
                int level_cap = 0);

// Dijkstra from `source` that stops once every remaining vertex is at
// distance >= radius. Entries at or beyond the radius are kInf.
SsspResult sssp_truncated(const Graph& g, int source, double radius);

struct MultiSourceResult {
  std::vector<double> dist;
  std::vector<int> nearest;  // closest source, smaller id on ties; -1 if none
};

// Distance to the nearest member of `sources` for every vertex.
MultiSourceResult multi_source_sssp(const Graph& g,
                                    std::span<const int> sources);

// Exact all-pairs distances, one Dijkstra per source, run in parallel.
std::vector<std::vector<double>> apsp_exact(const Graph& g);

// Path from `source` to `target` following `parent` pointers.
// Throws UnreachableError if target was not reached.
PathRecord extract_path(const Graph& g, const SsspResult& r, int source,
                        int target);

// The two largest entries of `weights` (W1 >= W2); W2 is 0 when there are
// fewer than two entries.
std::pair<double, double> heaviest_two(std::span<const double> weights);

struct ShortestPathSet {
  std::vector<PathRecord> paths;
  bool truncated = false;  // enumeration stopped at the cap
};

// All shortest u-v paths, found by walking the tight-edge DAG defined by
// distance arrays from both endpoints. Stops after `cap` paths.
ShortestPathSet enumerate_shortest_paths(const Graph& g, int u, int v,
                                         std::span<const double> dist_u,
                                         std::span<const double> dist_v,
                                         int cap, double rel_tol = 1e-9);

}  // namespace forge

#endif  // FORGE_SHORTEST_PATHS_HPP_
