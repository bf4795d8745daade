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

#ifndef BBOXER_DIFFERENTIAL_EVOLUTION_H_
#define BBOXER_DIFFERENTIAL_EVOLUTION_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bboxer/optimizer.h"
#include "bboxer/rng.h"

namespace bboxer {

enum class DeVariant { kRand1Bin, kCurrentToBest };

struct DeParams {
  uint32_t population = 30;
  double weight = 0.8;     // F
  double crossover = 0.5;  // CR
  double init_scale = 1.0;
  DeVariant variant = DeVariant::kRand1Bin;
};

// Differential evolution. Member 0 is the initial point; members 1..NP-1 are
// asked around it and compared with the current champion. Afterwards members
// are visited in turn and each child is compared with its parent only
// (rand1bin, k = 2) or with its parent and the champion (curr-to-best, k = 3).
//
// In rand1bin the champion follows its own lineage: it moves only when its
// child wins, since no comparison against other members is ever made.
class DifferentialEvolution : public Optimizer {
 public:
  DifferentialEvolution(const ParamVector& initial, uint64_t seed, const DeParams& params);

  std::unique_ptr<Optimizer> Clone() const override {
    return std::unique_ptr<Optimizer>(new DifferentialEvolution(*this));
  }
  uint32_t NumCases() const override { return variant_ == DeVariant::kRand1Bin ? 2 : 3; }
  ComparisonRequest Request() const override;
  std::optional<CandidateKey> RecommendationKey() const override {
    return keys_[champion_];
  }

  const std::vector<ParamVector>& population() const { return members_; }
  uint32_t champion() const { return champion_; }

 protected:
  DifferentialEvolution(const DifferentialEvolution&) = default;

  ParamVector Propose() override;
  void Update(uint32_t choice) override;
  ParamVector Recommendation() const override { return members_[champion_]; }

 private:
  // Index in [0, NP) different from every entry of `taken`.
  uint32_t DrawOther(const std::vector<uint32_t>& taken);

  DeParams params_;
  DeVariant variant_;
  std::vector<ParamVector> members_;
  std::vector<CandidateKey> keys_;
  uint32_t champion_ = 0;
  // Member the pending child belongs to (a new member during initialization).
  uint32_t target_ = 0;
  bool initializing_ = true;
  uint32_t next_member_ = 0;
  ParamVector child_;
  Rng rng_;
};

}  // namespace bboxer

#endif  // BBOXER_DIFFERENTIAL_EVOLUTION_H_
