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

#ifndef FORGE_EMULATOR_HPP_
#define FORGE_EMULATOR_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "forge/graph.hpp"
#include "forge/hierarchy.hpp"

namespace forge {

// Multiplicative stretch alpha plus additive a*W1 + b*W2, where W1 >= W2
// are the two heaviest edges of a bound-minimizing shortest path.
struct StretchParams {
  int k = 0;
  int alpha = 0;
  int a = 0;
  int b = 0;

  friend bool operator==(const StretchParams&, const StretchParams&) = default;
};

StretchParams stretch_params(int k);

// Provenance of an emulator edge; when a pair qualifies for several
// families the smallest tag in this order wins.
enum class Tag { D, E1, Product, B1, B2 };

std::string tag_name(Tag t, int product_level);

struct EmulatorEdge {
  int u = 0;
  int v = 0;          // u < v
  double w = 0.0;     // kInf for pairs the fast builder never reached
  Tag tag = Tag::D;
  int product_level = -1;  // smallest witnessing product index, Product only

  friend bool operator==(const EmulatorEdge&, const EmulatorEdge&) = default;
};

struct Emulator {
  int n = 0;
  int k = 0;
  std::string mode;  // alg1 | alg2 | general | fast
  std::uint64_t seed = 0;
  std::vector<double> betas;
  std::vector<EmulatorEdge> f;  // sorted by (u, v)

  void write(std::ostream& out) const;
  void save(const std::string& path) const;
  static Emulator parse(std::istream& in);
  static Emulator load(const std::string& path);
};

struct ProductPair {
  int u = 0;
  int v = 0;
  int level = 0;  // smallest i with the pair in S_{i-1} x S_{k-i}
};

// All cross pairs of the S_{i-1} x S_{k-i} families, i in 1..k, mirrors
// and duplicates collapsed, sorted by (u, v). The second form keeps only
// the listed family indices.
std::vector<ProductPair> assemble_products(const Hierarchy& h);
std::vector<ProductPair> assemble_products(const Hierarchy& h,
                                           std::span<const int> indices);

Emulator build_alg1(const Graph& g, double beta = 1.0 / 3,
                    double gamma = 1.0 / 3, std::uint64_t seed = 0);

Emulator build_alg2(const Graph& g, std::vector<double> betas = {},
                    std::uint64_t seed = 0);

Emulator build_general(const Graph& g, int k, std::vector<double> betas = {},
                       std::uint64_t seed = 0);

struct FastResult {
  Emulator emulator;
  std::vector<double> d;  // n*n row-major distance estimates, d >= delta

  double at(int u, int v) const { return d[static_cast<std::size_t>(u) *
                                           emulator.n + v]; }
};

// Oracle-free builder: weights filled from pivot installs, per-edge
// relaxations and restricted SSSP sweeps instead of all-pairs distances.
FastResult build_fast(const Graph& g, int k, std::vector<double> betas = {},
                      std::uint64_t seed = 0);

}  // namespace forge

#endif  // FORGE_EMULATOR_HPP_
