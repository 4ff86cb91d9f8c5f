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

#include "forge/tz_compare.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "forge/graph.hpp"

namespace forge {

namespace {

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

mpz_class pow2(int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpz_class pow_mpz(const mpz_class& base, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

struct Coeffs {
  mpz_class a;  // 2^{k+1} - 4
  mpz_class b;  // 6^k - 1
  mpz_class c;  // 2^{k+2} - 4
};

Coeffs coeffs(int k) {
  Coeffs co;
  co.a = pow2(k + 1) - 4;
  mpz_ui_pow_ui(co.b.get_mpz_t(), 6, k);
  co.b -= 1;
  co.c = pow2(k + 2) - 4;
  return co;
}

mpq_class pow_mpq(const mpq_class& x, int e) {
  mpq_class r(pow_mpz(x.get_num(), e), pow_mpz(x.get_den(), e));
  r.canonicalize();
  return r;
}

mpz_class floor_pow(const mpq_class& x, int e) {
  mpq_class p = pow_mpq(x, e);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), p.get_num().get_mpz_t(), p.get_den().get_mpz_t());
  return q;
}

}  // namespace

double f_k(double x, int k) {
  check_k(k);
  Coeffs co = coeffs(k);
  return co.a.get_d() * std::pow(x, k) - co.b.get_d() * std::pow(x, k - 1) +
         co.c.get_d();
}

mpq_class f_k_exact(const mpq_class& x, int k) {
  check_k(k);
  Coeffs co = coeffs(k);
  return mpq_class(co.a) * pow_mpq(x, k) -
         mpq_class(co.b) * pow_mpq(x, k - 1) + mpq_class(co.c);
}

ThresholdResult root_rk(int k, double tol) {
  check_k(k);
  Coeffs co = coeffs(k);
  ThresholdResult out;
  out.k = k;
  mpq_class x_hat(co.b, co.a);
  x_hat.canonicalize();
  mpq_class x_min(mpz_class((k - 1) * co.b), mpz_class(k * co.a));
  x_min.canonicalize();
  out.x_min = x_min.get_d();
  out.x_hat = x_hat.get_d();

  mpq_class lo = x_min, hi = x_hat;
  if (f_k_exact(lo, k) >= 0 || f_k_exact(hi, k) <= 0)
    throw std::logic_error("bracket does not straddle the root");
  // Bisect until the root is pinned both to the requested real tolerance
  // and to a single integer value of floor(x^k).
  for (int iter = 0; iter < 4096; ++iter) {
    bool tight = mpq_class(hi - lo).get_d() <= tol * out.x_hat;
    if (tight && floor_pow(lo, k) == floor_pow(hi, k)) break;
    mpq_class mid = (lo + hi) / 2;
    if (f_k_exact(mid, k) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.root = mpq_class((lo + hi) / 2).get_d();
  out.threshold = floor_pow(lo, k);
  mpz_class xf;
  mpz_fdiv_q(xf.get_mpz_t(), x_hat.get_num().get_mpz_t(),
             x_hat.get_den().get_mpz_t());
  out.theorem_threshold = pow_mpz(xf, k);
  return out;
}

CompareResult compare_bounds(const mpz_class& delta, int k) {
  check_k(k);
  if (delta < 1) throw std::invalid_argument("delta must be positive");
  Coeffs co = coeffs(k);
  CompareResult r;
  mpz_class ours = (pow2(k + 1) - 3) * delta + co.c;
  const double d = delta.get_d();
  r.ours = ours.get_d();
  r.tz = d + co.b.get_d() * std::pow(d, 1.0 - 1.0 / k);
  // ours < tz  iff  (ours - delta)^k < b^k * delta^{k-1}, settled in
  // integers.
  mpz_class lhs = pow_mpz(ours - delta, k);
  mpz_class rhs = pow_mpz(co.b, k) * pow_mpz(delta, k - 1);
  r.winner = lhs < rhs ? 'o' : (lhs > rhs ? 't' : '=');
  return r;
}

CompareResult compare_bounds(long long delta, int k) {
  return compare_bounds(mpz_class(static_cast<long>(delta)), k);
}

std::vector<ThresholdResult> threshold_table(int k_max) {
  if (k_max < 2 || k_max > kMaxThresholdK)
    throw CapabilityError("threshold table supports k in [2, " +
                          std::to_string(kMaxThresholdK) + "]");
  std::vector<ThresholdResult> out;
  for (int k = 2; k <= k_max; ++k) out.push_back(root_rk(k));
  return out;
}

void write_threshold_csv(std::ostream& out,
                         const std::vector<ThresholdResult>& table) {
  out << "k,x_min,x_hat,root,threshold,theorem_threshold\n";
  for (const ThresholdResult& r : table) {
    out << r.k << "," << format_weight(r.x_min) << ","
        << format_weight(r.x_hat) << "," << format_weight(r.root) << ","
        << r.threshold.get_str() << "," << r.theorem_threshold.get_str()
        << "\n";
  }
}

}  // namespace forge
