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

#ifndef FORGE_VERIFIER_HPP_
#define FORGE_VERIFIER_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "forge/emulator.hpp"
#include "forge/graph.hpp"
#include "forge/hierarchy.hpp"
#include "forge/shortest_paths.hpp"

namespace forge {

// Taxonomy of a shortest path by its edges outside E_1: none (a), exactly
// one (b), or at least two (c).
struct CaseInfo {
  char label = 'a';
  int first_missing = -1;  // edge position along the path, or -1
  int last_missing = -1;
  int missing_count = 0;
};

CaseInfo classify_path(const Graph& g, const PathRecord& p,
                       std::span<const int> edge_levels);

// Distances in the emulator, infinite-weight edges skipped.
SsspResult emulator_sssp(const Emulator& em, int source);
std::vector<std::vector<double>> emulator_apsp(const Emulator& em);

struct PairRecord {
  int u = 0;
  int v = 0;
  double delta_g = 0.0;
  double delta_h = 0.0;
  char case_label = 'a';
  double w1 = 0.0;
  double w2 = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool truncated = false;
};

struct VerifyOptions {
  long long enumeration_cap = 100000;
  long long pair_budget = 10000;  // sampled pairs once n exceeds 300
  std::uint64_t sample_seed = 0;
  double rel_tol = 1e-9;
  bool keep_records = true;
};

struct StretchReport {
  StretchParams params;
  long long pairs = 0;
  long long violations = 0;
  long long lower_violations = 0;
  long long inconclusive = 0;
  long long case_count[3] = {0, 0, 0};
  // Diagnostics beyond the headline bound: pairs whose best path avoids
  // every heavy edge must be exact, and single-heavy-edge pairs obey the
  // tighter additive form.
  long long case_a_mismatches = 0;
  long long case_b_tight_violations = 0;
  double max_ratio = 1.0;
  std::vector<PairRecord> records;

  bool pass() const { return violations == 0 && lower_violations == 0; }
};

// Checks delta_H against alpha*delta_G + a*W1 + b*W2 over the
// bound-minimizing shortest path of every examined pair. A failing pair
// whose path enumeration hit the cap counts as inconclusive, not as a
// violation.
StretchReport verify_stretch(const Graph& g, const Emulator& em,
                             const StretchParams& params,
                             const VerifyOptions& opt = {});

void write_stretch_csv(std::ostream& out, const StretchReport& r);

struct ClaimsReport {
  long long edges_sampled = 0;
  long long case_b_instances = 0;
  long long case_c_instances = 0;
  long long counterexamples = 0;
  std::vector<std::string> details;  // one line per counterexample
};

// Diagnoses the pivot-distance recurrences: for sampled edges outside
// E_1, distance to the i-th pivot stays below i*w while the premise chain
// holds; for sampled paths with two missing edges, the mod-4 bound table.
ClaimsReport verify_claims(const Graph& g, const Hierarchy& h,
                           int sample_budget, std::uint64_t seed = 0);

struct SizeReport {
  int n = 0;
  int k = 0;
  long long f_size = 0;
  std::map<std::string, long long> tag_counts;
  double predicted_exponent = 0.0;
  double observed_exponent = 0.0;  // log|F| / log n
};

SizeReport size_report(const Emulator& em, const Graph& g);

void write_size_csv(std::ostream& out, const SizeReport& r);

}  // namespace forge

#endif  // FORGE_VERIFIER_HPP_
