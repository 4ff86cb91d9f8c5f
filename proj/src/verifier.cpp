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

#include "forge/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "forge/parallel.hpp"
#include "forge/rng.hpp"

namespace forge {

CaseInfo classify_path(const Graph& g, const PathRecord& p,
                       std::span<const int> edge_levels) {
  CaseInfo info;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    int e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
    if (edge_levels[e] > 1) {
      if (info.first_missing < 0) info.first_missing = static_cast<int>(i);
      info.last_missing = static_cast<int>(i);
      ++info.missing_count;
    }
  }
  if (info.missing_count == 0) {
    info.label = 'a';
  } else if (info.missing_count == 1) {
    info.label = 'b';
  } else {
    info.label = 'c';
  }
  return info;
}

namespace {

// Flat adjacency over the finite emulator edges.
struct EmulatorAdj {
  int n;
  std::vector<std::vector<std::pair<int, double>>> adj;

  explicit EmulatorAdj(const Emulator& em) : n(em.n), adj(em.n) {
    for (const EmulatorEdge& e : em.f) {
      if (e.w == kInf) continue;
      adj[e.u].push_back({e.v, e.w});
      adj[e.v].push_back({e.u, e.w});
    }
  }
};

SsspResult dijkstra(const EmulatorAdj& h, int source) {
  SsspResult r;
  r.dist.assign(h.n, kInf);
  r.parent.assign(h.n, -1);
  std::vector<char> settled(h.n, 0);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  r.dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (auto [v, w] : h.adj[u]) {
      if (settled[v]) continue;
      double nd = d + w;
      if (nd < r.dist[v] || (nd == r.dist[v] && u < r.parent[v])) {
        r.dist[v] = nd;
        r.parent[v] = u;
        heap.push({nd, v});
      }
    }
  }
  return r;
}

}  // namespace

SsspResult emulator_sssp(const Emulator& em, int source) {
  return dijkstra(EmulatorAdj(em), source);
}

std::vector<std::vector<double>> emulator_apsp(const Emulator& em) {
  EmulatorAdj adj(em);
  std::vector<std::vector<double>> out(em.n);
  parallel_for(em.n, [&](int s) { out[s] = dijkstra(adj, s).dist; });
  return out;
}

StretchReport verify_stretch(const Graph& g, const Emulator& em,
                             const StretchParams& params,
                             const VerifyOptions& opt) {
  if (em.n != g.n())
    throw std::invalid_argument("emulator built for a different vertex count");
  StretchReport rep;
  rep.params = params;

  Hierarchy h =
      build_hierarchy(g, HierarchyConfig{em.k, em.betas, em.seed});

  // Pair list: full sweep at small n, seeded sample above.
  std::vector<std::pair<int, int>> todo;
  if (g.n() <= 300) {
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) todo.push_back({u, v});
  } else {
    CounterRng rng(opt.sample_seed, 0x7061697273ULL);
    std::set<std::pair<int, int>> seen;
    while (static_cast<long long>(todo.size()) < opt.pair_budget) {
      int u = static_cast<int>(rng.next_below(g.n()));
      int v = static_cast<int>(rng.next_below(g.n()));
      if (u == v) continue;
      auto key = std::minmax(u, v);
      if (seen.insert(key).second) todo.push_back(key);
    }
  }

  // Distance rows for every vertex that appears in a pair.
  std::vector<int> sources;
  {
    std::vector<char> need(g.n(), 0);
    for (auto [u, v] : todo) need[u] = need[v] = 1;
    for (int u = 0; u < g.n(); ++u)
      if (need[u]) sources.push_back(u);
  }
  std::vector<int> row(g.n(), -1);
  for (std::size_t i = 0; i < sources.size(); ++i)
    row[sources[i]] = static_cast<int>(i);
  std::vector<std::vector<double>> dist_g(sources.size());
  std::vector<std::vector<double>> dist_h(sources.size());
  EmulatorAdj adj(em);
  parallel_for(static_cast<int>(sources.size()), [&](int i) {
    dist_g[i] = sssp(g, sources[i]).dist;
    dist_h[i] = dijkstra(adj, sources[i]).dist;
  });

  std::vector<PairRecord> recs(todo.size());
  std::vector<char> skip(todo.size(), 0);
  parallel_for(static_cast<int>(todo.size()), [&](int idx) {
    auto [u, v] = todo[idx];
    const auto& du = dist_g[row[u]];
    const auto& dv = dist_g[row[v]];
    if (du[v] == kInf) {
      skip[idx] = 1;
      return;
    }
    PairRecord r;
    r.u = u;
    r.v = v;
    r.delta_g = du[v];
    r.delta_h = dist_h[row[u]][v];
    auto paths = enumerate_shortest_paths(
        g, u, v, du, dv, static_cast<int>(opt.enumeration_cap));
    r.truncated = paths.truncated;
    double best = kInf;
    char best_label = 'c';
    double best_w1 = 0.0, best_w2 = 0.0;
    bool any_case_a = false;
    double best_b_w1 = kInf;
    for (const PathRecord& p : paths.paths) {
      auto [w1, w2] = heaviest_two(p.edge_weights);
      double bound = params.alpha * r.delta_g + params.a * w1 + params.b * w2;
      CaseInfo ci = classify_path(g, p, h.edge_level);
      if (ci.label == 'a') any_case_a = true;
      if (ci.label == 'b') best_b_w1 = std::min(best_b_w1, w1);
      if (bound < best) {
        best = bound;
        best_label = ci.label;
        best_w1 = w1;
        best_w2 = w2;
      }
    }
    r.case_label = best_label;
    r.w1 = best_w1;
    r.w2 = best_w2;
    r.bound = best;
    r.slack = best - r.delta_h;
    // Stash the two diagnostics in spare fields via the record itself:
    // encoded below when reducing.
    recs[idx] = r;
    // Diagnostics are reduced sequentially later; store booleans by
    // reusing skip codes.
    if (any_case_a && !nearly_equal(r.delta_h, r.delta_g, opt.rel_tol))
      skip[idx] = 2;
    else if (best_label == 'b' && best_b_w1 != kInf &&
             r.delta_h > r.delta_g + 2.0 * (params.k - 1) * best_b_w1 +
                             opt.rel_tol * std::max(1.0, r.delta_h))
      skip[idx] = 3;
  });

  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (skip[i] == 1) continue;
    const PairRecord& r = recs[i];
    ++rep.pairs;
    ++rep.case_count[r.case_label - 'a'];
    if (r.delta_h < r.delta_g * (1.0 - opt.rel_tol)) ++rep.lower_violations;
    const double tol = opt.rel_tol * std::max(1.0, r.bound);
    if (r.delta_h > r.bound + tol) {
      if (r.truncated) {
        ++rep.inconclusive;
      } else {
        ++rep.violations;
      }
    }
    if (skip[i] == 2) ++rep.case_a_mismatches;
    if (skip[i] == 3) ++rep.case_b_tight_violations;
    if (r.delta_g > 0.0 && r.delta_h != kInf)
      rep.max_ratio = std::max(rep.max_ratio, r.delta_h / r.delta_g);
    if (r.delta_h == kInf) rep.max_ratio = kInf;
    if (opt.keep_records) rep.records.push_back(r);
  }
  return rep;
}

void write_stretch_csv(std::ostream& out, const StretchReport& r) {
  out << "u,v,delta_g,delta_h,case,w1,w2,bound,slack,truncated\n";
  for (const PairRecord& p : r.records) {
    out << p.u << "," << p.v << "," << format_weight(p.delta_g) << ","
        << format_weight(p.delta_h) << "," << p.case_label << ","
        << format_weight(p.w1) << "," << format_weight(p.w2) << ","
        << format_weight(p.bound) << "," << format_weight(p.slack) << ","
        << (p.truncated ? 1 : 0) << "\n";
  }
  out << "summary: pairs=" << r.pairs << " violations=" << r.violations
      << " max_ratio=" << format_weight(r.max_ratio) << "\n";
}

namespace {

// Ball membership test: is `s` strictly inside Ball(center, S_i, S_j)?
bool in_ball(const Hierarchy& h,
             const std::vector<std::vector<double>>& apsp, int center, int s,
             int i, int j) {
  if (h.level_of[s] < i) return false;
  return apsp[center][s] < h.pivot_dist[j][center];
}

}  // namespace

ClaimsReport verify_claims(const Graph& g, const Hierarchy& h,
                           int sample_budget, std::uint64_t seed) {
  ClaimsReport rep;
  auto apsp = apsp_exact(g);
  const int k = h.k;
  const double tol = 1e-9;

  // Pivot recurrence on single missing edges: walk edges outside E_1 in a
  // seeded random order.
  std::vector<int> heavy;
  for (int e = 0; e < g.m(); ++e)
    if (h.edge_level[e] > 1) heavy.push_back(e);
  {
    CounterRng rng(seed, 0xb0);
    for (std::size_t i = heavy.size(); i > 1; --i)
      std::swap(heavy[i - 1], heavy[rng.next_below(i)]);
  }
  if (static_cast<int>(heavy.size()) > sample_budget)
    heavy.resize(sample_budget);
  for (int e : heavy) {
    ++rep.edges_sampled;
    const int x = g.edge(e).u, y = g.edge(e).v;
    const double w = g.edge(e).w;
    for (int i = 2; i <= k; ++i) {
      bool premises = true;
      for (int j = 1; j <= i - 1 && premises; ++j) {
        if (h.pivots[j][x] < 0 || h.pivots[j][y] < 0 ||
            in_ball(h, apsp, y, h.pivots[j][x], j, j + 1) ||
            in_ball(h, apsp, x, h.pivots[j][y], j, j + 1))
          premises = false;
      }
      if (!premises) break;
      ++rep.case_b_instances;
      for (int end : {x, y}) {
        if (h.pivot_dist[i][end] > i * w + tol * std::max(1.0, i * w)) {
          ++rep.counterexamples;
          std::ostringstream msg;
          msg << "pivot recurrence: edge (" << x << "," << y << ") w=" << w
              << " i=" << i << " dist=" << h.pivot_dist[i][end]
              << " bound=" << i * w;
          rep.details.push_back(msg.str());
        }
      }
    }
  }

  // Mod-4 bounds on pairs of missing edges along sampled shortest paths.
  CounterRng rng(seed, 0xc0);
  int tried = 0;
  while (tried < sample_budget) {
    ++tried;
    int u = static_cast<int>(rng.next_below(g.n()));
    int v = static_cast<int>(rng.next_below(g.n()));
    if (u == v) continue;
    auto r = sssp(g, u);
    if (r.dist[v] == kInf) continue;
    PathRecord p = extract_path(g, r, u, v);
    CaseInfo ci = classify_path(g, p, h.edge_level);
    if (ci.label != 'c') continue;
    const int x = p.vertices[ci.first_missing];
    const int y = p.vertices[ci.first_missing + 1];
    const int z = p.vertices[ci.last_missing];
    const int ww = p.vertices[ci.last_missing + 1];
    const double wxy = p.edge_weights[ci.first_missing];
    const double wzw = p.edge_weights[ci.last_missing];
    const double dxw = apsp[x][ww];
    const int p1x = h.pivots[1][x], p1w = h.pivots[1][ww];
    if (p1x < 0 || p1w < 0) continue;
    if (in_ball(h, apsp, ww, p1x, 1, 2) || in_ball(h, apsp, x, p1w, 1, 2))
      continue;
    for (int i = 3; i <= k; ++i) {
      bool premises = true;
      for (int j = 1; j <= i - 2 && premises; ++j) {
        if (h.pivots[j][x] < 0 || h.pivots[j][ww] < 0 ||
            in_ball(h, apsp, p1w, h.pivots[j][x], j, j + 2) ||
            in_ball(h, apsp, p1x, h.pivots[j][ww], j, j + 2))
          premises = false;
      }
      if (!premises) break;
      ++rep.case_c_instances;
      auto table = [&](double a, double b) {
        if (i % 4 == 0)
          return 0.5 * (i * dxw + (i + 2) * a + (i - 4) * b);
        if (i % 2 == 0)
          return 0.5 * (i * dxw + (i - 2) * a + i * b);
        return 0.5 * ((i - 1) * dxw + (i + 1) * a + (i - 1) * b);
      };
      const double bx = table(wxy, wzw);
      const double bw = table(wzw, wxy);
      if (h.pivot_dist[i][x] > bx + tol * std::max(1.0, bx) ||
          h.pivot_dist[i][ww] > bw + tol * std::max(1.0, bw)) {
        ++rep.counterexamples;
        std::ostringstream msg;
        msg << "mod-4 bound: path " << u << "->" << v << " x=" << x
            << " w=" << ww << " i=" << i;
        rep.details.push_back(msg.str());
      }
    }
  }
  return rep;
}

SizeReport size_report(const Emulator& em, const Graph& g) {
  SizeReport r;
  r.n = em.n;
  r.k = em.k;
  r.f_size = static_cast<long long>(em.f.size());
  for (const EmulatorEdge& e : em.f) {
    std::string name = e.tag == Tag::Product ? "P" : tag_name(e.tag, -1);
    ++r.tag_counts[name];
  }
  r.predicted_exponent = 1.0 + 1.0 / em.k;
  r.observed_exponent =
      em.n > 1 && r.f_size > 0
          ? std::log(static_cast<double>(r.f_size)) / std::log(em.n)
          : 0.0;
  (void)g;
  return r;
}

void write_size_csv(std::ostream& out, const SizeReport& r) {
  out << "n,k,f_size,d,e1,p,b1,b2,predicted_exponent,observed_exponent\n";
  auto count = [&](const std::string& s) {
    auto it = r.tag_counts.find(s);
    return it == r.tag_counts.end() ? 0LL : it->second;
  };
  out << r.n << "," << r.k << "," << r.f_size << "," << count("D") << ","
      << count("E1") << "," << count("P") << "," << count("B1") << ","
      << count("B2") << "," << format_weight(r.predicted_exponent) << ","
      << format_weight(r.observed_exponent) << "\n";
}

}  // namespace forge
