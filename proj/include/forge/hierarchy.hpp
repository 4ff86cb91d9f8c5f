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

#ifndef FORGE_HIERARCHY_HPP_
#define FORGE_HIERARCHY_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "forge/graph.hpp"

namespace forge {

// Nested vertex sets S_0 = V down to S_k = {}; a vertex of S_{i-1} enters
// S_i with probability n^{-beta_i}.
struct HierarchyConfig {
  int k = 2;
  std::vector<double> betas;  // beta_1..beta_{k-1}; empty means all 1/k
  std::uint64_t seed = 0;

  void validate() const;
  std::vector<double> effective_betas() const;
};

struct Hierarchy {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<double> betas;
  std::vector<int> level_of;  // highest i with the vertex in S_i

  // Indexed by level 0..k. Level 0 is the identity (p_0(u) = u); level k
  // has no pivots (-1, distance infinity).
  std::vector<std::vector<int>> pivots;
  std::vector<std::vector<double>> pivot_dist;

  // Smallest i >= 1 with the edge in E_i; always in 1..k since E_k = E.
  std::vector<int> edge_level;

  // Members of S_i in ascending id order.
  std::vector<int> members(int i) const;

  void write_dump(std::ostream& out) const;
};

std::vector<int> sample_hierarchy(const Graph& g, const HierarchyConfig& cfg);

void compute_pivots(const Graph& g, Hierarchy& h);

std::vector<int> compute_edge_levels(const Graph& g, const Hierarchy& h);

// Sampling, pivots and edge levels in one go.
Hierarchy build_hierarchy(const Graph& g, const HierarchyConfig& cfg);

struct WeightedPair {
  int u = 0;
  int v = 0;
  double w = 0.0;

  friend bool operator==(const WeightedPair&, const WeightedPair&) = default;
};

// Pivot edges (u, p_i(u)) for every vertex and level, weight delta(u,
// p_i(u)), deduplicated to the minimum weight per unordered pair.
std::vector<WeightedPair> build_D(const Hierarchy& h);

struct BunchEdges {
  std::vector<WeightedPair> b1;  // u to s in Ball(u, S_i, S_{i+1})
  std::vector<WeightedPair> b2;  // u in S_1 to s in Ball(u, S_i, S_{i+2})
};

enum class BunchMode {
  exact,            // full Dijkstra from every ball center
  restricted_sssp,  // Dijkstra confined to E_{i+1} resp. E_{i+2}
};

// Both modes emit identical edges with exact shortest-path weights; the
// restricted mode only ever scans the sparse low-level edge sets.
BunchEdges build_bunch_edges(const Graph& g, const Hierarchy& h,
                             BunchMode mode);

}  // namespace forge

#endif  // FORGE_HIERARCHY_HPP_
