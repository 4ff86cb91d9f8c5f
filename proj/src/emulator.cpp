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

#include "forge/emulator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "forge/parallel.hpp"
#include "forge/shortest_paths.hpp"

namespace forge {

StretchParams stretch_params(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  StretchParams p;
  p.k = k;
  p.alpha = 2 * (k / 2) - 1;
  int ceil_half = (k + 1) / 2;
  p.a = 2 * ceil_half;
  p.b = std::max(0, 2 * (ceil_half - 2));
  return p;
}

std::string tag_name(Tag t, int product_level) {
  switch (t) {
    case Tag::D:
      return "D";
    case Tag::E1:
      return "E1";
    case Tag::Product:
      return "P" + std::to_string(product_level);
    case Tag::B1:
      return "B1";
    case Tag::B2:
      return "B2";
  }
  throw std::logic_error("bad tag");
}

namespace {

std::pair<Tag, int> parse_tag(const std::string& s) {
  if (s == "D") return {Tag::D, -1};
  if (s == "E1") return {Tag::E1, -1};
  if (s == "B1") return {Tag::B1, -1};
  if (s == "B2") return {Tag::B2, -1};
  if (s.size() >= 2 && s[0] == 'P') return {Tag::Product, std::stoi(s.substr(1))};
  throw std::runtime_error("unknown edge tag '" + s + "'");
}

}  // namespace

void Emulator::write(std::ostream& out) const {
  out << "h " << n << " " << f.size() << " " << k << " " << mode << " "
      << seed << "\n";
  out << "b";
  for (double b : betas) out << " " << format_weight(b);
  out << "\n";
  for (const EmulatorEdge& e : f) {
    out << "e " << e.u << " " << e.v << " " << format_weight(e.w) << " "
        << tag_name(e.tag, e.product_level) << "\n";
  }
}

void Emulator::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write(out);
}

Emulator Emulator::parse(std::istream& in) {
  Emulator em;
  std::string line;
  int lineno = 0;
  long long want = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                               ": " + what);
    };
    if (tok == "h") {
      if (want >= 0) fail("duplicate header");
      if (!(ls >> em.n >> want >> em.k >> em.mode >> em.seed))
        fail("malformed header");
    } else if (tok == "b") {
      double b;
      while (ls >> b) em.betas.push_back(b);
    } else if (tok == "e") {
      if (want < 0) fail("edge before header");
      EmulatorEdge e;
      std::string w, tag;
      if (!(ls >> e.u >> e.v >> w >> tag)) fail("malformed edge");
      e.w = w == "inf" ? kInf : std::stod(w);
      std::tie(e.tag, e.product_level) = parse_tag(tag);
      if (e.u < 0 || e.v < 0 || e.u >= em.n || e.v >= em.n || e.u >= e.v)
        fail("bad endpoints");
      em.f.push_back(e);
    } else {
      fail("unknown record '" + tok + "'");
    }
  }
  if (want < 0) throw std::runtime_error("parse error: missing header");
  if (static_cast<long long>(em.f.size()) != want)
    throw std::runtime_error("parse error: header announces " +
                             std::to_string(want) + " edges, found " +
                             std::to_string(em.f.size()));
  return em;
}

Emulator Emulator::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

std::vector<ProductPair> assemble_products(const Hierarchy& h,
                                           std::span<const int> indices) {
  const int k = h.k;
  std::vector<std::vector<int>> sets(k);
  for (int i = 0; i < k; ++i) sets[i] = h.members(i);
  std::map<std::pair<int, int>, int> level;
  for (int i = 1; i <= k; ++i) {
    if (!indices.empty() &&
        std::find(indices.begin(), indices.end(), i) == indices.end()) {
      continue;
    }
    const auto& a = sets[i - 1];
    const auto& b = sets[k - i];
    for (int s : a) {
      for (int t : b) {
        if (s == t) continue;
        auto key = std::minmax(s, t);
        auto [it, fresh] = level.emplace(key, i);
        if (!fresh && i < it->second) it->second = i;
      }
    }
  }
  std::vector<ProductPair> out;
  out.reserve(level.size());
  for (const auto& [key, i] : level) out.push_back({key.first, key.second, i});
  return out;
}

std::vector<ProductPair> assemble_products(const Hierarchy& h) {
  return assemble_products(h, {});
}

namespace {

struct AssemblePlan {
  bool include_b1 = true;
  bool include_b2 = true;
  // Empty keeps every product family; otherwise only the listed i.
  std::vector<int> product_levels;
};

// Shared family collection: candidates gathered in tag order, first
// source wins, weights then resolved per pair.
Emulator assemble(const Graph& g, const Hierarchy& h, const std::string& mode,
                  const AssemblePlan& plan,
                  const std::function<double(int, int)>& dist,
                  BunchMode bunch_mode) {
  std::map<std::pair<int, int>, std::pair<Tag, int>> pairs;
  auto add = [&](int u, int v, Tag tag, int plevel) {
    pairs.emplace(std::minmax(u, v), std::make_pair(tag, plevel));
  };
  for (const WeightedPair& e : build_D(h)) add(e.u, e.v, Tag::D, -1);
  for (int e = 0; e < g.m(); ++e) {
    if (h.edge_level[e] <= 1) add(g.edge(e).u, g.edge(e).v, Tag::E1, -1);
  }
  for (const ProductPair& p : assemble_products(h, plan.product_levels))
    add(p.u, p.v, Tag::Product, p.level);
  if (plan.include_b1 || plan.include_b2) {
    BunchEdges b = build_bunch_edges(g, h, bunch_mode);
    if (plan.include_b1)
      for (const WeightedPair& e : b.b1) add(e.u, e.v, Tag::B1, -1);
    if (plan.include_b2)
      for (const WeightedPair& e : b.b2) add(e.u, e.v, Tag::B2, -1);
  }
  Emulator em;
  em.n = g.n();
  em.k = h.k;
  em.mode = mode;
  em.seed = h.seed;
  em.betas = h.betas;
  em.f.reserve(pairs.size());
  for (const auto& [key, prov] : pairs) {
    EmulatorEdge e;
    e.u = key.first;
    e.v = key.second;
    e.tag = prov.first;
    e.product_level = prov.second;
    int orig = g.find_edge(e.u, e.v);
    e.w = orig >= 0 ? g.edge(orig).w : dist(e.u, e.v);
    em.f.push_back(e);
  }
  return em;
}

Emulator build_oracle(const Graph& g, const HierarchyConfig& cfg,
                      const std::string& mode, const AssemblePlan& plan) {
  Hierarchy h = build_hierarchy(g, cfg);
  auto apsp = apsp_exact(g);
  return assemble(g, h, mode, plan,
                  [&](int u, int v) { return apsp[u][v]; },
                  BunchMode::exact);
}

}  // namespace

Emulator build_alg1(const Graph& g, double beta, double gamma,
                    std::uint64_t seed) {
  AssemblePlan plan;
  plan.include_b1 = false;
  plan.include_b2 = false;
  return build_oracle(g, HierarchyConfig{3, {beta, gamma}, seed}, "alg1",
                      plan);
}

Emulator build_alg2(const Graph& g, std::vector<double> betas,
                    std::uint64_t seed) {
  if (betas.empty()) betas.assign(3, 0.25);
  AssemblePlan plan;
  plan.include_b2 = false;
  plan.product_levels = {2, 3};  // S_1 x S_2 and its mirror only
  return build_oracle(g, HierarchyConfig{4, std::move(betas), seed}, "alg2",
                      plan);
}

Emulator build_general(const Graph& g, int k, std::vector<double> betas,
                       std::uint64_t seed) {
  return build_oracle(g, HierarchyConfig{k, std::move(betas), seed},
                      "general", AssemblePlan{});
}

FastResult build_fast(const Graph& g, int k, std::vector<double> betas,
                      std::uint64_t seed) {
  Hierarchy h = build_hierarchy(g, HierarchyConfig{k, std::move(betas), seed});
  const int n = g.n();
  FastResult out;
  out.d.assign(static_cast<std::size_t>(n) * n, kInf);
  auto at = [&](int u, int v) -> double& {
    return out.d[static_cast<std::size_t>(u) * n + v];
  };
  auto relax = [&](int u, int v, double w) {
    if (w < at(u, v)) at(u, v) = at(v, u) = w;
  };
  for (int u = 0; u < n; ++u) at(u, u) = 0.0;
  // Exact pivot distances.
  for (int i = 1; i < k; ++i) {
    for (int u = 0; u < n; ++u) {
      if (h.pivots[i][u] >= 0) relax(u, h.pivots[i][u], h.pivot_dist[i][u]);
    }
  }
  // Per-edge relaxations across all pivot level pairs.
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < k; ++i) {
      int pi = h.pivots[i][e.u];
      if (pi < 0) continue;
      for (int j = 0; j < k; ++j) {
        int pj = h.pivots[j][e.v];
        if (pj < 0 || pi == pj) continue;
        relax(pi, pj, h.pivot_dist[i][e.u] + e.w + h.pivot_dist[j][e.v]);
      }
    }
  }
  // Restricted sweeps: from s in S_i over E_{i+1}, and over E_{i+2} only
  // when k >= 5 (smaller k never consumes those entries).
  std::vector<std::vector<std::pair<int, double>>> sweep(n);
  parallel_for(n, [&](int s) {
    const int top = h.level_of[s];
    for (int i = 0; i <= std::min(top, k - 2); ++i) {
      auto r = sssp(g, s, h.edge_level, i + 1);
      for (int u = 0; u < n; ++u)
        if (r.dist[u] != kInf) sweep[s].push_back({u, r.dist[u]});
    }
    if (k >= 5) {
      for (int i = 0; i <= std::min(top, k - 3); ++i) {
        auto r = sssp(g, s, h.edge_level, i + 2);
        for (int u = 0; u < n; ++u)
          if (r.dist[u] != kInf) sweep[s].push_back({u, r.dist[u]});
      }
    }
  });
  for (int s = 0; s < n; ++s)
    for (const auto& [u, d] : sweep[s]) relax(s, u, d);

  AssemblePlan plan;
  plan.include_b2 = k >= 5;
  out.emulator = assemble(g, h, "fast", plan,
                          [&](int u, int v) { return at(u, v); },
                          BunchMode::restricted_sssp);
  return out;
}

}  // namespace forge
