// Copyright 2026 The bboxer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bboxer/flip_bounds.h"

#include <cmath>
#include <numbers>

#include "bboxer/binomial.h"
#include "bboxer/errors.h"

namespace bboxer {
namespace {

void Check(uint64_t n, uint64_t k) {
  if (n < 1) throw PreconditionError("at least one voter per round");
  if (k > n) throw PreconditionError("cannot flip more votes than there are voters");
}

}  // namespace

FlipBound SingleRoundFlipBound(uint64_t n, uint64_t k) {
  Check(n, k);
  FlipBound b;
  b.stated = (2.0 * static_cast<double>(k) + 1.0) /
            std::sqrt(2.0 * static_cast<double>(n) * std::numbers::pi);
  b.corrected = 2.0 * b.stated;
  b.stated_vacuous = b.stated >= 1.0;
  b.corrected_vacuous = b.corrected >= 1.0;
  return b;
}

RunBound RunPoisoningBound(uint64_t b, uint64_t n, uint64_t k) {
  const double v = static_cast<double>(b) * SingleRoundFlipBound(n, k).stated;
  return {v, v > 1.0};
}

RunBound CorrectedRunPoisoningBound(uint64_t b, uint64_t n, uint64_t k) {
  const double v = static_cast<double>(b) * SingleRoundFlipBound(n, k).corrected;
  return {v, v > 1.0};
}

double PrivacyDelta(uint64_t b, uint64_t n) {
  if (n < 1) throw PreconditionError("at least one voter per round");
  return 3.0 * static_cast<double>(b) /
         std::sqrt(2.0 * static_cast<double>(n) * std::numbers::pi);
}

double ExactFlipProb(uint64_t n, double f0, uint64_t k) {
  Check(n, k);
  // Integers x with n/2 - k <= x <= n/2 + k, i.e. 2x in [n - 2k, n + 2k].
  const int64_t nn = static_cast<int64_t>(n);
  const int64_t kk = static_cast<int64_t>(k);
  const int64_t lo = (nn - 2 * kk + 1) >= 0 ? (nn - 2 * kk + 1) / 2 : -((2 * kk - nn) / 2);
  const int64_t hi = (nn + 2 * kk) / 2;
  return BinomialRangeProbability(n, f0, lo, hi);
}

double TieRuleFlipProb(uint64_t n, double f0, uint64_t k) {
  Check(n, k);
  if (k == 0) return 0.0;
  const int64_t threshold = static_cast<int64_t>((n + 1) / 2);
  const int64_t kk = static_cast<int64_t>(k);
  return BinomialRangeProbability(n, f0, threshold - kk, threshold + kk - 1);
}

double MultiRoundDivergence(double q, uint64_t b) {
  if (!(q >= 0.0 && q <= 1.0)) throw PreconditionError("probability outside [0, 1]");
  if (b == 0) return 0.0;
  return -std::expm1(static_cast<double>(b) * std::log1p(-q));
}

}  // namespace bboxer
