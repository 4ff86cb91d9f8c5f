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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "forge/graph.hpp"
#include "forge/rng.hpp"
#include "forge/shortest_paths.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

// Small random connected-ish multigraph-free graph for cross checks.
Graph random_graph(std::uint64_t seed, int n, int m, bool weighted) {
  CounterRng rng(seed, 0);
  std::set<std::pair<int, int>> used;
  std::vector<Edge> edges;
  // Spanning chain first so most instances are connected.
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
    edges.push_back({key.first, key.second,
                     weighted ? 0.05 + rng.next_unit() : 1.0});
  }
  return Graph(n, std::move(edges), weighted);
}

}  // namespace

TEST_CASE("graph invariants are enforced") {
  CHECK_THROWS_AS(Graph(3, {{0, 0, 1.0}}, false), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3, 1.0}}, false), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, -1, 1.0}}, false), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}, {1, 0, 2.0}}, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, -2.0}}, true), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, kInf}}, true), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 2.0}}, false), std::invalid_argument);
  CHECK_NOTHROW(Graph(3, {{0, 1, 2.0}, {1, 2, 0.25}}, true));
  CHECK_NOTHROW(Graph(1, {}, false));
}

TEST_CASE("adjacency is sorted and edge lookup works") {
  Graph g(5, {{4, 1, 1.0}, {1, 0, 1.0}, {1, 3, 1.0}, {2, 1, 1.0}}, false);
  auto nb = g.neighbors(1);
  REQUIRE(nb.size() == 4);
  CHECK(nb[0].to == 0);
  CHECK(nb[1].to == 2);
  CHECK(nb[2].to == 3);
  CHECK(nb[3].to == 4);
  CHECK(g.find_edge(1, 4) == 0);
  CHECK(g.find_edge(4, 1) == 0);
  CHECK(g.find_edge(0, 4) == -1);
  CHECK(g.neighbors(0).size() == 1);
}

TEST_CASE("text format round trips byte for byte") {
  Graph g = random_graph(7, 20, 45, true);
  std::ostringstream a;
  g.write(a);
  std::istringstream back(a.str());
  Graph g2 = Graph::parse(back);
  std::ostringstream b;
  g2.write(b);
  CHECK(a.str() == b.str());
  CHECK(g2.n() == g.n());
  CHECK(g2.m() == g.m());
  for (int e = 0; e < g.m(); ++e) CHECK(g2.edge(e).w == g.edge(e).w);
}

TEST_CASE("parser reports malformed input with line numbers") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return Graph::parse(in);
  };
  CHECK_NOTHROW(parse("# comment\np 2 1 unweighted\n0 1 1\n"));
  CHECK_THROWS_WITH(parse("0 1 1\n"),
                    doctest::Contains("line 1"));
  CHECK_THROWS_WITH(parse("p 2 1 sideways\n0 1 1\n"),
                    doctest::Contains("sideways"));
  CHECK_THROWS_WITH(parse("p 2 1 unweighted\n0 x 1\n"),
                    doctest::Contains("line 2"));
  CHECK_THROWS_WITH(parse("p 2 2 unweighted\n0 1 1\n"),
                    doctest::Contains("announces"));
  CHECK_THROWS_AS(parse(""), std::runtime_error);
  CHECK_THROWS_AS(parse("p 2 1 unweighted\np 2 1 unweighted\n0 1 1\n"),
                  std::runtime_error);
}

TEST_CASE("weight formatting round trips") {
  CHECK(format_weight(1.0) == "1");
  CHECK(format_weight(0.5) == "0.5");
  CHECK(format_weight(kInf) == "inf");
  CounterRng rng(99, 0);
  for (int i = 0; i < 200; ++i) {
    double w = rng.next_unit() * std::pow(10.0, i % 7 - 3);
    double back = std::stod(format_weight(w));
    CHECK(back == w);
  }
}

TEST_CASE("dijkstra matches bellman-ford on random graphs") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    for (bool weighted : {false, true}) {
      Graph g = random_graph(seed, 40, 90, weighted);
      for (int s : {0, 7, 39}) {
        auto fast = sssp(g, s);
        auto slow = oracle::bellman_ford(g, s);
        for (int v = 0; v < g.n(); ++v) {
          CHECK(nearly_equal(fast.dist[v], slow[v], 1e-12));
        }
        // Parent chains must realize the claimed distances.
        for (int v = 0; v < g.n(); ++v) {
          if (v == s || fast.dist[v] == kInf) continue;
          PathRecord p = extract_path(g, fast, s, v);
          CHECK(nearly_equal(p.total, fast.dist[v], 1e-12));
        }
      }
    }
  }
}

TEST_CASE("dijkstra is deterministic under tie-heavy inputs") {
  Graph g = random_graph(11, 30, 80, false);  // unit weights, many ties
  auto a = sssp(g, 3);
  auto b = sssp(g, 3);
  CHECK(a.parent == b.parent);
  CHECK(a.dist == b.dist);
  // Smallest-parent rule: no other tight predecessor has a smaller id.
  for (int v = 0; v < g.n(); ++v) {
    if (a.parent[v] < 0) continue;
    for (const Arc& arc : g.neighbors(v)) {
      if (a.dist[arc.to] + g.edge(arc.edge).w == a.dist[v]) {
        CHECK(a.parent[v] <= arc.to);
      }
    }
  }
}

TEST_CASE("truncated dijkstra stops at the radius") {
  Graph g = random_graph(21, 50, 120, true);
  auto full = sssp(g, 0);
  double radius = 0.0;
  std::vector<double> finite;
  for (double d : full.dist)
    if (d != kInf) finite.push_back(d);
  std::sort(finite.begin(), finite.end());
  radius = finite[finite.size() / 2];
  auto trunc = sssp_truncated(g, 0, radius);
  for (int v = 0; v < g.n(); ++v) {
    if (full.dist[v] < radius) {
      CHECK(trunc.dist[v] == full.dist[v]);
    } else {
      CHECK(trunc.dist[v] == kInf);
    }
  }
  auto empty = sssp_truncated(g, 0, 0.0);
  for (double d : empty.dist) CHECK(d == kInf);
}

TEST_CASE("multi-source distances match per-source minima") {
  Graph g = random_graph(31, 45, 100, true);
  std::vector<int> sources = {3, 17, 40};
  auto ms = multi_source_sssp(g, sources);
  std::vector<std::vector<double>> per;
  for (int s : sources) per.push_back(oracle::bellman_ford(g, s));
  for (int v = 0; v < g.n(); ++v) {
    double best = kInf;
    int who = -1;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (per[i][v] < best) {
        best = per[i][v];
        who = sources[i];
      }
    }
    CHECK(nearly_equal(ms.dist[v], best, 1e-12));
    if (best != kInf && ms.dist[v] == best) CHECK(ms.nearest[v] <= who);
  }
  auto none = multi_source_sssp(g, {});
  for (int v = 0; v < g.n(); ++v) CHECK(none.nearest[v] == -1);
}

TEST_CASE("apsp agrees with the oracle") {
  Graph g = random_graph(41, 25, 60, true);
  auto fast = apsp_exact(g);
  auto slow = oracle::all_pairs(g);
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      CHECK(nearly_equal(fast[u][v], slow[u][v], 1e-12));
}

TEST_CASE("heaviest_two picks the top pair") {
  CHECK(heaviest_two(std::vector<double>{}) == std::pair{0.0, 0.0});
  CHECK(heaviest_two(std::vector<double>{3.0}) == std::pair{3.0, 0.0});
  CHECK(heaviest_two(std::vector<double>{1.0, 5.0, 2.0, 5.0}) ==
        std::pair{5.0, 5.0});
  CHECK(heaviest_two(std::vector<double>{2.0, 1.0, 0.5}) ==
        std::pair{2.0, 1.0});
}

TEST_CASE("shortest path enumeration matches exhaustive search") {
  for (std::uint64_t seed : {51u, 52u, 53u}) {
    Graph g = random_graph(seed, 12, 25, false);  // ties galore
    auto from = apsp_exact(g);
    for (int u = 0; u < g.n(); ++u) {
      for (int v = u + 1; v < g.n(); ++v) {
        auto got = enumerate_shortest_paths(g, u, v, from[u], from[v], 10000);
        auto want = oracle::shortest_path_list(g, u, v);
        REQUIRE(!got.truncated);
        std::set<std::vector<int>> a, b;
        for (const auto& p : got.paths) a.insert(p.vertices);
        for (const auto& p : want) b.insert(p);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("enumeration honors the cap") {
  // Ladder of diamonds: 2^5 shortest paths between the endpoints.
  std::vector<Edge> edges;
  int n = 0;
  int prev = n++;
  for (int i = 0; i < 5; ++i) {
    int a = n++, b = n++, next = n++;
    edges.push_back({prev, a, 1.0});
    edges.push_back({prev, b, 1.0});
    edges.push_back({a, next, 1.0});
    edges.push_back({b, next, 1.0});
    prev = next;
  }
  Graph g(n, std::move(edges), false);
  auto du = sssp(g, 0).dist;
  auto dv = sssp(g, prev).dist;
  auto all = enumerate_shortest_paths(g, 0, prev, du, dv, 1000);
  CHECK(all.paths.size() == 32);
  CHECK(!all.truncated);
  auto capped = enumerate_shortest_paths(g, 0, prev, du, dv, 7);
  CHECK(capped.paths.size() == 7);
  CHECK(capped.truncated);
}

TEST_CASE("counter rng is stable and uniform-ish") {
  CounterRng a(42, 0), b(42, 0), c(43, 0);
  CHECK(a.next_u64() == b.next_u64());
  CHECK(a.next_u64() == b.next_u64());
  CHECK(a.next_u64() != c.next_u64());
  CHECK(uniform_draw(9, 1, 2) == uniform_draw(9, 1, 2));
  CHECK(uniform_draw(9, 1, 2) != uniform_draw(9, 2, 1));
  double acc = 0;
  CounterRng r(7, 1);
  for (int i = 0; i < 4000; ++i) {
    double x = r.next_unit();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    acc += x;
  }
  CHECK(acc / 4000 == doctest::Approx(0.5).epsilon(0.05));
}
