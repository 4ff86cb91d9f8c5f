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

#ifndef FORGE_GRAPH_HPP_
#define FORGE_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative comparison for distances assembled from machine reals.
inline bool nearly_equal(double a, double b, double rel_tol) {
  if (a == b) return true;
  const double scale = std::max({1.0, a < 0 ? -a : a, b < 0 ? -b : b});
  const double d = a - b;
  return (d < 0 ? -d : d) <= rel_tol * scale;
}

class UnreachableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Adjacency entry: neighbor vertex and the index of the connecting edge.
struct Arc {
  int to = 0;
  int edge = 0;
};

// Immutable undirected weighted graph. Vertices are 0..n-1; no self loops,
// no parallel edges, non-negative weights. Safe to share across threads.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges, bool weighted);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool weighted() const { return weighted_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Neighbors of u sorted by vertex id.
  std::span<const Arc> neighbors(int u) const {
    return {adj_.data() + adj_start_[u],
            adj_.data() + adj_start_[u + 1]};
  }

  // Index of the undirected edge {u, v}, or -1.
  int find_edge(int u, int v) const;

  // Edge-list text format: `p <n> <m> <weighted|unweighted>` then one
  // `<u> <v> <w>` line per edge; `#` starts a comment line.
  static Graph parse(std::istream& in);
  static Graph load(const std::string& path);
  void write(std::ostream& out,
             std::span<const std::string> comments = {}) const;
  void save(const std::string& path,
            std::span<const std::string> comments = {}) const;

 private:
  int n_;
  bool weighted_;
  std::vector<Edge> edges_;
  std::vector<Arc> adj_;
  std::vector<std::size_t> adj_start_;
};

// A concrete walk through the graph with its per-edge weights.
struct PathRecord {
  std::vector<int> vertices;
  std::vector<double> edge_weights;
  double total = 0.0;

  int hops() const { return static_cast<int>(edge_weights.size()); }
};

// Builds the record for a vertex sequence, validating that consecutive
// vertices are adjacent in `g`.
PathRecord make_path(const Graph& g, std::span<const int> vertices);

// Round-trippable decimal rendering of a weight ("1" for exact ones).
std::string format_weight(double w);

}  // namespace forge

#endif  // FORGE_GRAPH_HPP_
