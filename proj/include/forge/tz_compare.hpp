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

#ifndef FORGE_TZ_COMPARE_HPP_
#define FORGE_TZ_COMPARE_HPP_

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

namespace forge {

// Largest k served with exact integer thresholds; the polynomial
// coefficients themselves stay exact at any k, but thresholds beyond this
// have not been validated and the CLI advertises the cap.
inline constexpr int kMaxThresholdK = 12;

// f(x) = (2^{k+1}-4) x^k - (6^k-1) x^{k-1} + (2^{k+2}-4); its unique root
// beyond the minimum marks where the additive bound stops winning.
double f_k(double x, int k);
mpq_class f_k_exact(const mpq_class& x, int k);

struct ThresholdResult {
  int k = 0;
  double x_min = 0.0;  // (k-1)(6^k-1) / (k(2^{k+1}-4)), the minimum point
  double x_hat = 0.0;  // (6^k-1) / (2^{k+1}-4), right bracket end
  double root = 0.0;
  mpz_class threshold;          // floor(root^k), exact
  mpz_class theorem_threshold;  // floor(x_hat)^k
};

// Bisection over exact rationals between the bracketing points; the
// returned threshold floor is certified, not rounded.
ThresholdResult root_rk(int k, double tol = 1e-12);

struct CompareResult {
  double ours = 0.0;  // (2^{k+1}-3) delta + 2^{k+2}-4
  double tz = 0.0;    // delta + (6^k-1) delta^{1-1/k}
  char winner = '=';  // 'o' ours, 't' tz, '=' tie; decided exactly
};

CompareResult compare_bounds(const mpz_class& delta, int k);
CompareResult compare_bounds(long long delta, int k);

std::vector<ThresholdResult> threshold_table(int k_max);

void write_threshold_csv(std::ostream& out,
                         const std::vector<ThresholdResult>& table);

}  // namespace forge

#endif  // FORGE_TZ_COMPARE_HPP_
