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

#include "forge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace forge {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line) +
                           ": " + what);
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, bool weighted)
    : n_(n), weighted_(weighted), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self loop");
    if (!(e.w >= 0.0) || std::isinf(e.w))
      throw std::invalid_argument("edge weight must be finite and >= 0");
    if (!weighted_ && e.w != 1.0)
      throw std::invalid_argument("unweighted graph with non-unit weight");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("parallel edge");
  }
  adj_start_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_start_[e.u + 1];
    ++adj_start_[e.v + 1];
  }
  for (int u = 0; u < n_; ++u) adj_start_[u + 1] += adj_start_[u];
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(adj_start_.begin(), adj_start_.end() - 1);
  for (int e = 0; e < m(); ++e) {
    adj_[cursor[edges_[e].u]++] = {edges_[e].v, e};
    adj_[cursor[edges_[e].v]++] = {edges_[e].u, e};
  }
  for (int u = 0; u < n_; ++u) {
    std::sort(adj_.begin() + adj_start_[u], adj_.begin() + adj_start_[u + 1],
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

int Graph::find_edge(int u, int v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const Arc& a, int t) { return a.to < t; });
  if (it != nb.end() && it->to == v) return it->edge;
  return -1;
}

Graph Graph::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  bool weighted = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "p") {
      if (n >= 0) parse_fail(lineno, "duplicate header");
      std::string mode;
      if (!(ls >> n >> m >> mode)) parse_fail(lineno, "malformed header");
      if (mode == "weighted") {
        weighted = true;
      } else if (mode == "unweighted") {
        weighted = false;
      } else {
        parse_fail(lineno, "unknown weight mode '" + mode + "'");
      }
      if (n < 0 || m < 0) parse_fail(lineno, "negative counts");
      edges.reserve(static_cast<std::size_t>(m));
    } else {
      if (n < 0) parse_fail(lineno, "edge before header");
      Edge e;
      std::istringstream es(line);
      if (!(es >> e.u >> e.v >> e.w)) parse_fail(lineno, "malformed edge");
      edges.push_back(e);
    }
  }
  if (n < 0) throw std::runtime_error("parse error: missing header");
  if (static_cast<int>(edges.size()) != m)
    throw std::runtime_error("parse error: header announces " +
                             std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  try {
    return Graph(n, std::move(edges), weighted);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("parse error: ") + e.what());
  }
}

Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

void Graph::write(std::ostream& out,
                  std::span<const std::string> comments) const {
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << "p " << n_ << " " << m() << " "
      << (weighted_ ? "weighted" : "unweighted") << "\n";
  for (const Edge& e : edges_)
    out << e.u << " " << e.v << " " << format_weight(e.w) << "\n";
}

void Graph::save(const std::string& path,
                 std::span<const std::string> comments) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write(out, comments);
}

PathRecord make_path(const Graph& g, std::span<const int> vertices) {
  PathRecord p;
  p.vertices.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int e = g.find_edge(vertices[i], vertices[i + 1]);
    if (e < 0)
      throw std::invalid_argument("path step " + std::to_string(vertices[i]) +
                                  " -> " + std::to_string(vertices[i + 1]) +
                                  " is not an edge");
    p.edge_weights.push_back(g.edge(e).w);
    p.total += g.edge(e).w;
  }
  return p;
}

std::string format_weight(double w) {
  if (std::isinf(w)) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == w) {
    // Prefer the shortest representation that round-trips.
    for (int prec = 1; prec < 17; ++prec) {
      char s[40];
      std::snprintf(s, sizeof s, "%.*g", prec, w);
      std::sscanf(s, "%lf", &back);
      if (back == w) return s;
    }
  }
  return buf;
}

}  // namespace forge
