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

// forge: emulator construction and verification driver.
//
// Exit codes: 0 success, 1 stretch violations found, 2 usage or parse
// error, 3 capability error (request beyond supported precision).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forge/emulator.hpp"
#include "forge/generate.hpp"
#include "forge/graph.hpp"
#include "forge/rng.hpp"
#include "forge/tz_compare.hpp"
#include "forge/verifier.hpp"

namespace {

using forge::Emulator;
using forge::Graph;

std::vector<double> parse_betas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

int run_gen(int n, long long m, const std::string& weights,
            const std::string& connectivity, std::uint64_t seed,
            const std::string& out_path) {
  forge::GenConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.unit_weights = weights == "unit";
  cfg.require_connected = connectivity == "require-connected";
  cfg.seed = seed;
  forge::GenResult res = forge::generate_graph(cfg);
  std::vector<std::string> comments = {
      "seed " + std::to_string(seed),
      "attempts " + std::to_string(res.attempts)};
  res.graph.save(out_path, comments);
  std::cout << "gen: n=" << n << " m=" << m << " attempts=" << res.attempts
            << " -> " << out_path << "\n";
  return 0;
}

Emulator build_dispatch(const Graph& g, const std::string& mode, int k,
                        const std::vector<double>& betas, std::uint64_t seed,
                        std::vector<double>* d_out) {
  if (mode == "alg1") {
    if (k != 0 && k != 3) {
      throw CLI::ValidationError("--mode alg1 fixes k to 3");
    }
    double beta = betas.size() > 0 ? betas[0] : 1.0 / 3.0;
    double gamma = betas.size() > 1 ? betas[1] : 1.0 / 3.0;
    return forge::build_alg1(g, beta, gamma, seed);
  }
  if (mode == "alg2") {
    if (k != 0 && k != 4) {
      throw CLI::ValidationError("--mode alg2 fixes k to 4");
    }
    return forge::build_alg2(g, betas, seed);
  }
  int kk = k == 0 ? 3 : k;
  if (mode == "fast") {
    forge::FastResult res = forge::build_fast(g, kk, betas, seed);
    if (d_out) *d_out = std::move(res.d);
    return std::move(res.emulator);
  }
  return forge::build_general(g, kk, betas, seed);
}

int run_build(const std::string& in_path, const std::string& mode, int k,
              const std::string& betas_text, std::uint64_t seed,
              const std::string& out_path) {
  Graph g = Graph::load(in_path);
  std::vector<double> betas =
      betas_text.empty() ? std::vector<double>{} : parse_betas(betas_text);
  Emulator em = build_dispatch(g, mode, k, betas, seed, nullptr);
  em.save(out_path);
  forge::SizeReport sizes = forge::size_report(em, g);
  std::ofstream csv = open_out(out_path + ".size.csv");
  forge::write_size_csv(csv, sizes);
  std::cout << "build: mode=" << mode << " k=" << em.k << " |F|=" << em.f.size()
            << " -> " << out_path << "\n";
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& em_path,
               long long cap, long long pairs, const std::string& out_path) {
  Graph g = Graph::load(graph_path);
  Emulator em = Emulator::load(em_path);
  forge::VerifyOptions opt;
  opt.enumeration_cap = cap;
  opt.pair_budget = pairs;
  opt.keep_records = !out_path.empty();
  forge::StretchReport rep =
      forge::verify_stretch(g, em, forge::stretch_params(em.k), opt);
  if (!out_path.empty()) {
    std::ofstream csv = open_out(out_path);
    forge::write_stretch_csv(csv, rep);
  }
  std::cout << "verify: pairs=" << rep.pairs << " violations=" << rep.violations
            << " lower_violations=" << rep.lower_violations
            << " inconclusive=" << rep.inconclusive
            << " max_ratio=" << forge::format_weight(rep.max_ratio) << "\n";
  return rep.pass() ? 0 : 1;
}

int run_bench(const std::string& grid_text, int k, const std::string& mode,
              int seeds, int m_per_n, std::uint64_t seed,
              const std::string& out_path) {
  std::vector<int> grid;
  for (double v : parse_betas(grid_text)) grid.push_back(static_cast<int>(v));
  std::ostringstream body;
  body << "n,seed,f_size,d,e1,p,b1,b2,millis\n";
  std::vector<double> log_n, log_f;
  for (int n : grid) {
    double mean_f = 0.0;
    for (int s = 0; s < seeds; ++s) {
      forge::GenConfig cfg;
      cfg.n = n;
      cfg.m = static_cast<long long>(m_per_n) * n;
      cfg.seed = forge::CounterRng::derive(seed, static_cast<std::uint64_t>(s));
      forge::GenResult gen = forge::generate_graph(cfg);
      auto t0 = std::chrono::steady_clock::now();
      Emulator em = build_dispatch(gen.graph, mode, k, {}, cfg.seed, nullptr);
      auto t1 = std::chrono::steady_clock::now();
      forge::SizeReport sz = forge::size_report(em, gen.graph);
      auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
              .count();
      body << n << "," << s << "," << em.f.size() << "," << sz.tag_counts["D"]
           << "," << sz.tag_counts["E1"] << "," << sz.tag_counts["P"] << ","
           << sz.tag_counts["B1"] << "," << sz.tag_counts["B2"] << "," << ms
           << "\n";
      mean_f += static_cast<double>(em.f.size()) / seeds;
    }
    log_n.push_back(std::log(static_cast<double>(n)));
    log_f.push_back(std::log(mean_f));
  }
  std::string slope = "n/a";
  if (grid.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    auto cnt = static_cast<double>(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      sx += log_n[i];
      sy += log_f[i];
      sxx += log_n[i] * log_n[i];
      sxy += log_n[i] * log_f[i];
    }
    slope = forge::format_weight((cnt * sxy - sx * sy) / (cnt * sxx - sx * sx));
  }
  body << "slope," << slope << "\n";
  if (!out_path.empty()) {
    open_out(out_path) << body.str();
  }
  std::cout << body.str();
  return 0;
}

int run_compare_tz(int k_max, long long sweep, const std::string& out_path) {
  std::vector<forge::ThresholdResult> table = forge::threshold_table(k_max);
  std::ostringstream body;
  forge::write_threshold_csv(body, table);
  if (sweep > 0) {
    body << "delta,winner\n";
    for (long long d = 1; d <= sweep; ++d) {
      forge::CompareResult cr = forge::compare_bounds(d, k_max);
      body << d << "," << cr.winner << "\n";
    }
  }
  if (!out_path.empty()) {
    open_out(out_path) << body.str();
  }
  std::cout << body.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"emulator-forge: sparse distance emulators with verification"};
  app.require_subcommand(1);

  // gen
  int gen_n = 100;
  long long gen_m = 300;
  std::string gen_weights = "uniform";
  std::string gen_connectivity = "require-connected";
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random G(n,m) graph");
  gen->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "edge count")->check(CLI::NonNegativeNumber);
  gen->add_option("--weights", gen_weights, "unit | uniform")
      ->check(CLI::IsMember({"unit", "uniform"}));
  gen->add_option("--connectivity", gen_connectivity,
                  "require-connected | any")
      ->check(CLI::IsMember({"require-connected", "any"}));
  gen->add_option("--seed", gen_seed, "base seed");
  gen->add_option("--out", gen_out, "output graph file")->required();

  // build
  std::string build_in, build_mode = "general", build_betas, build_out;
  int build_k = 0;
  std::uint64_t build_seed = 0;
  CLI::App* build = app.add_subcommand("build", "construct an emulator");
  build->add_option("graph", build_in, "input graph file")->required();
  build->add_option("--k", build_k, "hierarchy depth")->check(CLI::Range(2, 64));
  build->add_option("--mode", build_mode, "alg1 | alg2 | general | fast")
      ->check(CLI::IsMember({"alg1", "alg2", "general", "fast"}));
  build->add_option("--betas", build_betas, "comma-separated sampling exponents");
  build->add_option("--seed", build_seed, "base seed");
  build->add_option("--out", build_out, "output emulator file")->required();

  // verify
  std::string verify_graph, verify_em, verify_out;
  long long verify_cap = 100000, verify_pairs = 10000;
  CLI::App* verify = app.add_subcommand("verify", "check stretch guarantees");
  verify->add_option("graph", verify_graph, "input graph file")->required();
  verify->add_option("emulator", verify_em, "input emulator file")->required();
  verify->add_option("--cap", verify_cap, "shortest-path enumeration cap")
      ->check(CLI::PositiveNumber);
  verify->add_option("--pairs", verify_pairs, "pair sampling budget")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", verify_out, "per-pair CSV output");

  // bench
  std::string bench_grid, bench_mode = "general", bench_out;
  int bench_k = 2, bench_seeds = 3, bench_m_per_n = 3;
  std::uint64_t bench_seed = 0;
  CLI::App* bench = app.add_subcommand("bench", "size scaling across n");
  bench->add_option("--grid", bench_grid, "comma-separated n values")
      ->required();
  bench->add_option("--k", bench_k, "hierarchy depth")->check(CLI::Range(2, 64));
  bench->add_option("--mode", bench_mode, "alg1 | alg2 | general | fast")
      ->check(CLI::IsMember({"alg1", "alg2", "general", "fast"}));
  bench->add_option("--seeds", bench_seeds, "seeds per grid point")
      ->check(CLI::PositiveNumber);
  bench->add_option("--m-per-n", bench_m_per_n, "edges per vertex")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--out", bench_out, "CSV output");

  // compare-tz
  int tz_k = 4;
  long long tz_sweep = 0;
  std::string tz_out;
  CLI::App* tz = app.add_subcommand(
      "compare-tz", "additive-vs-multiplicative crossover thresholds");
  tz->add_option("--k", tz_k, "largest k in the table")
      ->check(CLI::PositiveNumber);
  tz->add_option("--sweep", tz_sweep, "also emit winners for delta=1..N")
      ->check(CLI::NonNegativeNumber);
  tz->add_option("--out", tz_out, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      return run_gen(gen_n, gen_m, gen_weights, gen_connectivity, gen_seed,
                     gen_out);
    }
    if (build->parsed()) {
      return run_build(build_in, build_mode, build_k, build_betas, build_seed,
                       build_out);
    }
    if (verify->parsed()) {
      return run_verify(verify_graph, verify_em, verify_cap, verify_pairs,
                        verify_out);
    }
    if (bench->parsed()) {
      return run_bench(bench_grid, bench_k, bench_mode, bench_seeds,
                       bench_m_per_n, bench_seed, bench_out);
    }
    if (tz->parsed()) {
      return run_compare_tz(tz_k, tz_sweep, tz_out);
    }
  } catch (const forge::CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
