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

#include "forge/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>

#include "forge/parallel.hpp"
#include "forge/rng.hpp"
#include "forge/shortest_paths.hpp"

namespace forge {

void HierarchyConfig::validate() const {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (!betas.empty() && static_cast<int>(betas.size()) != k - 1)
    throw std::invalid_argument("expected k-1 beta values");
  for (double b : betas) {
    if (!(b >= 0.0 && b <= 1.0))
      throw std::invalid_argument("beta values must lie in [0, 1]");
  }
}

std::vector<double> HierarchyConfig::effective_betas() const {
  if (!betas.empty()) return betas;
  return std::vector<double>(k - 1, 1.0 / k);
}

std::vector<int> sample_hierarchy(const Graph& g, const HierarchyConfig& cfg) {
  cfg.validate();
  const std::vector<double> betas = cfg.effective_betas();
  std::vector<double> prob(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i)
    prob[i] = std::pow(static_cast<double>(g.n()), -betas[i]);
  std::vector<int> level_of(g.n(), 0);
  for (int u = 0; u < g.n(); ++u) {
    int level = 0;
    while (level < cfg.k - 1 &&
           uniform_draw(cfg.seed, u, level + 1) < prob[level]) {
      ++level;
    }
    level_of[u] = level;
  }
  return level_of;
}

std::vector<int> Hierarchy::members(int i) const {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(level_of.size()); ++u)
    if (level_of[u] >= i) out.push_back(u);
  return out;
}

void compute_pivots(const Graph& g, Hierarchy& h) {
  h.pivots.assign(h.k + 1, {});
  h.pivot_dist.assign(h.k + 1, {});
  h.pivots[0].resize(g.n());
  for (int u = 0; u < g.n(); ++u) h.pivots[0][u] = u;
  h.pivot_dist[0].assign(g.n(), 0.0);
  for (int i = 1; i < h.k; ++i) {
    auto sources = h.members(i);
    auto r = multi_source_sssp(g, sources);
    h.pivots[i] = std::move(r.nearest);
    h.pivot_dist[i] = std::move(r.dist);
  }
  h.pivots[h.k].assign(g.n(), -1);
  h.pivot_dist[h.k].assign(g.n(), kInf);
}

std::vector<int> compute_edge_levels(const Graph& g, const Hierarchy& h) {
  std::vector<int> level(g.m(), h.k);
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    for (int i = 1; i < h.k; ++i) {
      if (ed.w < h.pivot_dist[i][ed.u] || ed.w < h.pivot_dist[i][ed.v]) {
        level[e] = i;
        break;
      }
    }
  }
  return level;
}

Hierarchy build_hierarchy(const Graph& g, const HierarchyConfig& cfg) {
  cfg.validate();
  Hierarchy h;
  h.k = cfg.k;
  h.seed = cfg.seed;
  h.betas = cfg.effective_betas();
  h.level_of = sample_hierarchy(g, cfg);
  compute_pivots(g, h);
  h.edge_level = compute_edge_levels(g, h);
  return h;
}

std::vector<WeightedPair> build_D(const Hierarchy& h) {
  std::map<std::pair<int, int>, double> best;
  const int n = static_cast<int>(h.level_of.size());
  for (int i = 1; i < h.k; ++i) {
    for (int u = 0; u < n; ++u) {
      int p = h.pivots[i][u];
      if (p < 0 || p == u) continue;
      auto key = std::minmax(u, p);
      auto [it, fresh] = best.emplace(key, h.pivot_dist[i][u]);
      if (!fresh && h.pivot_dist[i][u] < it->second)
        it->second = h.pivot_dist[i][u];
    }
  }
  std::vector<WeightedPair> out;
  out.reserve(best.size());
  for (const auto& [key, w] : best) out.push_back({key.first, key.second, w});
  return out;
}

namespace {

// Ball edges from one center s at one set level i: every u whose distance
// to s beats u's pivot at level i+j. `dist` must be exact on those u
// (full Dijkstra, or Dijkstra over E_{i+j} which agrees on ball members).
void collect_ball(const Hierarchy& h, int s, int i, int j,
                  std::span<const double> dist,
                  std::span<const int> restrict_to_level,
                  std::vector<WeightedPair>& out) {
  const int n = static_cast<int>(h.level_of.size());
  const auto& bound = h.pivot_dist[i + j];
  for (int u = 0; u < n; ++u) {
    if (u == s || dist[u] >= bound[u]) continue;
    if (!restrict_to_level.empty() && h.level_of[u] < restrict_to_level[0])
      continue;
    out.push_back({u, s, dist[u]});
  }
}

std::vector<WeightedPair> dedup_pairs(std::vector<WeightedPair> edges) {
  for (WeightedPair& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const auto& a, const auto& b) {
                            return a.u == b.u && a.v == b.v;
                          }),
              edges.end());
  return edges;
}

}  // namespace

BunchEdges build_bunch_edges(const Graph& g, const Hierarchy& h,
                             BunchMode mode) {
  const int k = h.k;
  std::vector<std::vector<WeightedPair>> b1_per(g.n()), b2_per(g.n());
  const int s1_level[] = {1};
  parallel_for(g.n(), [&](int s) {
    const int top = h.level_of[s];
    // One scan per witnessing level; exact mode reuses a single full run.
    SsspResult full;
    if (mode == BunchMode::exact) full = sssp(g, s);
    for (int i = 0; i <= std::min(top, k - 2); ++i) {
      const SsspResult* d = &full;
      SsspResult restricted;
      if (mode == BunchMode::restricted_sssp) {
        restricted = sssp(g, s, h.edge_level, i + 1);
        d = &restricted;
      }
      collect_ball(h, s, i, 1, d->dist, {}, b1_per[s]);
    }
    for (int i = 0; i <= std::min(top, k - 3); ++i) {
      const SsspResult* d = &full;
      SsspResult restricted;
      if (mode == BunchMode::restricted_sssp) {
        restricted = sssp(g, s, h.edge_level, i + 2);
        d = &restricted;
      }
      collect_ball(h, s, i, 2, d->dist, s1_level, b2_per[s]);
    }
  });
  BunchEdges out;
  for (int s = 0; s < g.n(); ++s) {
    out.b1.insert(out.b1.end(), b1_per[s].begin(), b1_per[s].end());
    out.b2.insert(out.b2.end(), b2_per[s].begin(), b2_per[s].end());
  }
  out.b1 = dedup_pairs(std::move(out.b1));
  out.b2 = dedup_pairs(std::move(out.b2));
  return out;
}

void Hierarchy::write_dump(std::ostream& out) const {
  const int n = static_cast<int>(level_of.size());
  for (int u = 0; u < n; ++u) out << "v " << u << " " << level_of[u] << "\n";
  for (int i = 1; i < k; ++i) {
    for (int u = 0; u < n; ++u) {
      out << "pivot " << i << " " << u << " " << pivots[i][u] << " "
          << format_weight(pivot_dist[i][u]) << "\n";
    }
  }
  for (std::size_t e = 0; e < edge_level.size(); ++e)
    out << "elevel " << e << " " << edge_level[e] << "\n";
}

}  // namespace forge
