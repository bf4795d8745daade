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

#ifndef BBOXER_BINOMIAL_H_
#define BBOXER_BINOMIAL_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "bboxer/rng.h"

namespace bboxer {

// log C(n, x).
double LogBinomialCoefficient(uint64_t n, uint64_t x);

// P(X = x) for X ~ Binomial(n, p), evaluated in log-space.
double BinomialPmf(uint64_t n, double p, uint64_t x);

// P(lo <= X <= hi), clamped to [0, n]. Exact integer arithmetic for p = 1/2
// and n <= 64; log-space summation otherwise.
double BinomialRangeProbability(uint64_t n, double p, int64_t lo, int64_t hi);

// Exact Binomial(n, p) draws by inversion of a precomputed CDF table.
class BinomialSampler {
 public:
  BinomialSampler(uint64_t n, double p);

  // Shared table for (n, p); building one costs O(n) log-gamma calls.
  static std::shared_ptr<const BinomialSampler> Cached(uint64_t n, double p);

  uint64_t Sample(Rng& rng) const;
  uint64_t n() const { return n_; }
  double p() const { return p_; }

 private:
  uint64_t n_;
  double p_;
  std::vector<double> cdf_;
};

}  // namespace bboxer

#endif  // BBOXER_BINOMIAL_H_
