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

#ifndef BBOXER_FLIP_BOUNDS_H_
#define BBOXER_FLIP_BOUNDS_H_

#include <cstdint>

namespace bboxer {

// Bound on the probability that an adversary flipping k of the n votes of a
// majority round changes its outcome.
//   stated:    (2k + 1) / sqrt(2 n pi)
//   corrected: twice that. The largest point mass of Binomial(n, 1/2) is about
//              2 / sqrt(2 n pi), not 1 / sqrt(2 n pi), and the stated constant
//              is exceeded already at (n, k) = (5, 1).
struct FlipBound {
  double stated = 0.0;
  double corrected = 0.0;
  bool stated_vacuous = false;
  bool corrected_vacuous = false;
};
FlipBound SingleRoundFlipBound(uint64_t n, uint64_t k);

// b times the single-round stated bound, raw.
struct RunBound {
  double value = 0.0;
  bool vacuous = false;
};
RunBound RunPoisoningBound(uint64_t b, uint64_t n, uint64_t k);
RunBound CorrectedRunPoisoningBound(uint64_t b, uint64_t n, uint64_t k);

// delta of the (0, delta) privacy guarantee of a preference-driven run:
// 3 b / sqrt(2 n pi), the k = 1 poisoning bound.
double PrivacyDelta(uint64_t b, uint64_t n);

// P(n/2 - k <= X <= n/2 + k) for X ~ Binomial(n, f0): the interval the
// single-round argument controls.
double ExactFlipProb(uint64_t n, double f0, uint64_t k);

// Probability that k flips can change the outcome under the tie rule of the
// preference oracle (the first candidate wins iff 2X >= n): the honest count
// lies in [ceil(n/2) - k, ceil(n/2) + k - 1]. A subset of the interval above.
double TieRuleFlipProb(uint64_t n, double f0, uint64_t k);

// Divergence probability of b independent rounds, 1 - (1 - q)^b.
double MultiRoundDivergence(double q, uint64_t b);

}  // namespace bboxer

#endif  // BBOXER_FLIP_BOUNDS_H_
