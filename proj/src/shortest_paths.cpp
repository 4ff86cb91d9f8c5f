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

#include "forge/shortest_paths.hpp"

#include <algorithm>
#include <queue>

#include "forge/parallel.hpp"

namespace forge {

namespace {

using HeapEntry = std::pair<double, int>;  // (distance, vertex)
using MinHeap =
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

}  // namespace

SsspResult sssp(const Graph& g, int source, std::span<const int> edge_levels,
                int level_cap) {
  SsspResult r;
  r.dist.assign(g.n(), kInf);
  r.parent.assign(g.n(), -1);
  std::vector<char> settled(g.n(), 0);
  MinHeap heap;
  r.dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const Arc& a : g.neighbors(u)) {
      if (!edge_levels.empty() && edge_levels[a.edge] > level_cap) continue;
      if (settled[a.to]) continue;
      double nd = d + g.edge(a.edge).w;
      if (nd < r.dist[a.to] || (nd == r.dist[a.to] && u < r.parent[a.to])) {
        r.dist[a.to] = nd;
        r.parent[a.to] = u;
        heap.push({nd, a.to});
      }
    }
  }
  return r;
}

SsspResult sssp_truncated(const Graph& g, int source, double radius) {
  SsspResult r;
  r.dist.assign(g.n(), kInf);
  r.parent.assign(g.n(), -1);
  std::vector<char> settled(g.n(), 0);
  MinHeap heap;
  if (radius <= 0.0) return r;
  r.dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d >= radius) break;
    if (settled[u]) continue;
    settled[u] = 1;
    for (const Arc& a : g.neighbors(u)) {
      if (settled[a.to]) continue;
      double nd = d + g.edge(a.edge).w;
      if (nd < r.dist[a.to] || (nd == r.dist[a.to] && u < r.parent[a.to])) {
        r.dist[a.to] = nd;
        r.parent[a.to] = u;
        heap.push({nd, a.to});
      }
    }
  }
  // Vertices discovered but never settled lie at or beyond the radius.
  for (int v = 0; v < g.n(); ++v) {
    if (!settled[v]) {
      r.dist[v] = kInf;
      r.parent[v] = -1;
    }
  }
  return r;
}

MultiSourceResult multi_source_sssp(const Graph& g,
                                    std::span<const int> sources) {
  MultiSourceResult r;
  r.dist.assign(g.n(), kInf);
  r.nearest.assign(g.n(), -1);
  std::vector<char> settled(g.n(), 0);
  MinHeap heap;
  std::vector<int> sorted(sources.begin(), sources.end());
  std::sort(sorted.begin(), sorted.end());
  for (int s : sorted) {
    if (r.nearest[s] != -1) continue;
    r.dist[s] = 0.0;
    r.nearest[s] = s;
    heap.push({0.0, s});
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const Arc& a : g.neighbors(u)) {
      if (settled[a.to]) continue;
      double nd = d + g.edge(a.edge).w;
      if (nd < r.dist[a.to] ||
          (nd == r.dist[a.to] && r.nearest[u] < r.nearest[a.to])) {
        r.dist[a.to] = nd;
        r.nearest[a.to] = r.nearest[u];
        heap.push({nd, a.to});
      }
    }
  }
  return r;
}

std::vector<std::vector<double>> apsp_exact(const Graph& g) {
  std::vector<std::vector<double>> dist(g.n());
  parallel_for(g.n(), [&](int s) { dist[s] = sssp(g, s).dist; });
  return dist;
}

PathRecord extract_path(const Graph& g, const SsspResult& r, int source,
                        int target) {
  if (r.dist[target] == kInf)
    throw UnreachableError("vertex " + std::to_string(target) +
                           " unreachable from " + std::to_string(source));
  std::vector<int> rev;
  for (int v = target; v != -1; v = r.parent[v]) rev.push_back(v);
  if (rev.back() != source)
    throw UnreachableError("parent chain does not reach source");
  std::reverse(rev.begin(), rev.end());
  return make_path(g, rev);
}

std::pair<double, double> heaviest_two(std::span<const double> weights) {
  double w1 = 0.0, w2 = 0.0;
  for (double w : weights) {
    if (w > w1) {
      w2 = w1;
      w1 = w;
    } else if (w > w2) {
      w2 = w;
    }
  }
  return {w1, w2};
}

ShortestPathSet enumerate_shortest_paths(const Graph& g, int u, int v,
                                         std::span<const double> dist_u,
                                         std::span<const double> dist_v,
                                         int cap, double rel_tol) {
  ShortestPathSet out;
  const double total = dist_u[v];
  if (total == kInf) return out;
  // Iterative DFS over edges (x, y) tight for the u -> v distance. The
  // on-stack marks keep zero-weight ties from revisiting a vertex.
  std::vector<char> on_stack(g.n(), 0);
  std::vector<int> stack = {u};
  std::vector<std::size_t> arc_pos = {0};
  on_stack[u] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    if (x == v) {
      if (static_cast<int>(out.paths.size()) == cap) {
        out.truncated = true;
        return out;
      }
      out.paths.push_back(make_path(g, stack));
      on_stack[x] = 0;
      stack.pop_back();
      arc_pos.pop_back();
      continue;
    }
    auto nb = g.neighbors(x);
    bool advanced = false;
    while (arc_pos.back() < nb.size()) {
      const Arc& a = nb[arc_pos.back()++];
      if (on_stack[a.to]) continue;
      double via = dist_u[x] + g.edge(a.edge).w + dist_v[a.to];
      if (dist_u[a.to] >= dist_u[x] && nearly_equal(via, total, rel_tol)) {
        stack.push_back(a.to);
        arc_pos.push_back(0);
        on_stack[a.to] = 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      on_stack[x] = 0;
      stack.pop_back();
      arc_pos.pop_back();
    }
  }
  return out;
}

}  // namespace forge
