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

#include "bboxer/binomial.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "bboxer/errors.h"

namespace bboxer {

double LogBinomialCoefficient(uint64_t n, uint64_t x) {
  if (x > n) return -INFINITY;
  const double dn = static_cast<double>(n);
  const double dx = static_cast<double>(x);
  return std::lgamma(dn + 1.0) - std::lgamma(dx + 1.0) - std::lgamma(dn - dx + 1.0);
}

double BinomialPmf(uint64_t n, double p, uint64_t x) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("binomial p outside [0, 1]");
  if (x > n) return 0.0;
  if (p == 0.0) return x == 0 ? 1.0 : 0.0;
  if (p == 1.0) return x == n ? 1.0 : 0.0;
  const double dx = static_cast<double>(x);
  return std::exp(LogBinomialCoefficient(n, x) + dx * std::log(p) +
                  (static_cast<double>(n) - dx) * std::log1p(-p));
}

double BinomialRangeProbability(uint64_t n, double p, int64_t lo, int64_t hi) {
  lo = std::max<int64_t>(lo, 0);
  hi = std::min<int64_t>(hi, static_cast<int64_t>(n));
  if (lo > hi) return 0.0;
  if (p == 0.5 && n <= 64) {
    // Counting subsets exactly: sum of C(n, x) over the range, over 2^n.
    unsigned __int128 count = 0;
    unsigned __int128 c = 1;  // C(n, 0)
    for (uint64_t x = 0; x <= static_cast<uint64_t>(hi); ++x) {
      if (static_cast<int64_t>(x) >= lo) count += c;
      c = c * (n - x) / (x + 1);
    }
    return std::ldexp(static_cast<double>(count), -static_cast<int>(n));
  }
  double total = 0.0;
  for (int64_t x = lo; x <= hi; ++x) total += BinomialPmf(n, p, static_cast<uint64_t>(x));
  return std::min(total, 1.0);
}

BinomialSampler::BinomialSampler(uint64_t n, double p) : n_(n), p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("binomial p outside [0, 1]");
  cdf_.resize(n + 1);
  double acc = 0.0;
  for (uint64_t x = 0; x <= n; ++x) {
    acc += BinomialPmf(n, p, x);
    cdf_[x] = acc;
  }
  for (double& v : cdf_) v /= acc;
  cdf_.back() = 1.0;
}

std::shared_ptr<const BinomialSampler> BinomialSampler::Cached(uint64_t n, double p) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, double>, std::shared_ptr<const BinomialSampler>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, p});
  if (it != cache.end()) return it->second;
  if (cache.size() >= 256) cache.clear();
  auto sampler = std::make_shared<const BinomialSampler>(n, p);
  cache.emplace(std::make_pair(n, p), sampler);
  return sampler;
}

uint64_t BinomialSampler::Sample(Rng& rng) const {
  const double u = rng.Uniform();
  return static_cast<uint64_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
}

}  // namespace bboxer
