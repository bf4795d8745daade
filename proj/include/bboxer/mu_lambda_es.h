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

#ifndef BBOXER_MU_LAMBDA_ES_H_
#define BBOXER_MU_LAMBDA_ES_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "bboxer/optimizer.h"
#include "bboxer/rng.h"

namespace bboxer {

// How the data-dependent information of a generation is recorded.
enum class EsAccounting {
  // One record per offspring; the last offspring of a generation carries the
  // selected subset, k = C(lambda, mu) (times mu! with ranked weights).
  kSubset,
  // The mean is asked first (k = 1), then each offspring is compared with it
  // (k = 2). The offspring at least as good as the mean are recombined.
  kBinary,
};

struct EsParams {
  uint32_t lambda = 0;  // 0: 4 + floor(3 ln d)
  uint32_t mu = 0;      // 0: lambda / 2
  bool ranked_weights = false;
  double sigma = 1.0;
  EsAccounting accounting = EsAccounting::kSubset;
};

uint32_t DefaultLambda(std::size_t dimension);

// (mu, lambda)-ES with a diagonal covariance matrix: cumulative step-size
// adaptation plus rank-one and rank-mu updates of the diagonal, learning
// rates scaled by (d + 2) / 3. Recommends the distribution mean.
class DiagonalEs : public Optimizer {
 public:
  DiagonalEs(const ParamVector& initial, uint64_t seed, const EsParams& params);

  std::unique_ptr<Optimizer> Clone() const override {
    return std::unique_ptr<Optimizer>(new DiagonalEs(*this));
  }
  uint32_t NumCases() const override;
  ComparisonRequest Request() const override;

  uint32_t lambda() const { return lambda_; }
  uint32_t mu() const { return mu_; }
  double sigma() const { return sigma_; }
  const ParamVector& mean() const { return mean_; }
  const std::vector<double>& diagonal() const { return diag_; }
  uint64_t generation() const { return generation_; }

 protected:
  DiagonalEs(const DiagonalEs&) = default;

  ParamVector Propose() override;
  void Update(uint32_t choice) override;
  ParamVector Recommendation() const override { return mean_; }

 private:
  // Recombines `selected` (best first for ranked weights) and adapts.
  void EndGeneration(const std::vector<uint32_t>& selected);

  uint32_t lambda_;
  uint32_t mu_;
  bool ranked_;
  EsAccounting accounting_;
  uint32_t select_cases_ = 1;
  std::vector<double> weights_;

  ParamVector mean_;
  double sigma_;
  std::vector<double> diag_;
  std::vector<double> path_sigma_;
  std::vector<double> path_c_;
  uint64_t generation_ = 0;

  double c_sigma_, d_sigma_, c_c_, c_1_, c_mu_, chi_n_;

  // Position inside the generation: the next Ask fills this slot.
  uint32_t slot_ = 0;
  bool pending_mean_ = false;
  CandidateKey mean_key_ = kInitialKey;
  std::vector<std::vector<double>> z_;
  std::vector<ParamVector> offspring_;
  std::vector<CandidateKey> keys_;
  std::vector<uint32_t> beat_mean_;
  Rng rng_;
};

}  // namespace bboxer

#endif  // BBOXER_MU_LAMBDA_ES_H_
