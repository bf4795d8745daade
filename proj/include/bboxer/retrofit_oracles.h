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

#ifndef BBOXER_RETROFIT_ORACLES_H_
#define BBOXER_RETROFIT_ORACLES_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "bboxer/binomial.h"
#include "bboxer/dataset.h"
#include "bboxer/modifier.h"
#include "bboxer/oracle.h"
#include "bboxer/rng.h"
#include "bboxer/tensor_model.h"

namespace bboxer {

// Empirical loss of the model obtained from m0 by applying x.
ValueOracle::Objective RetrofitLoss(std::shared_ptr<const TensorModel> m0,
                                    ModifierSpec spec,
                                    std::shared_ptr<const LabeledDataset> data);

// Best-so-far comparison oracle over empirical losses; every candidate key is
// evaluated once.
ValueOracle MakeBestSoFarOracle(std::shared_ptr<const TensorModel> m0, ModifierSpec spec,
                                std::shared_ptr<const LabeledDataset> data,
                                int max_threads = 1);

// Votes of one preference round: `ones` of the `n` users preferred the first
// (newer) candidate.
struct VoteRecord {
  uint64_t n = 0;
  uint64_t ones = 0;
};

// Rewrites the honest votes of a round; the identity when unset.
using VoteAdversary = std::function<VoteRecord(const VoteRecord& honest, Rng& rng)>;

// Probability that a single user prefers the first candidate over the second.
using PreferenceModel =
    std::function<double(const Candidate& first, const Candidate& second)>;

// Majority vote of n independent users between two candidates. The first
// candidate wins when more than half of the votes favor it; an exact half
// goes to the first (newer) one. Only two-way comparisons are supported.
class PreferenceOracle : public ComparisonOracle {
 public:
  PreferenceOracle(uint64_t users, PreferenceModel model, uint64_t seed,
                   VoteAdversary adversary = {});

  uint32_t Compare(const ComparisonRequest& request) override;

  // Votes of the latest round, after the adversary.
  const std::optional<VoteRecord>& last_votes() const { return last_votes_; }
  const std::optional<VoteRecord>& last_honest_votes() const { return last_honest_; }
  uint64_t rounds() const { return rounds_; }

 private:
  uint64_t users_;
  PreferenceModel model_;
  VoteAdversary adversary_;
  Rng rng_;
  Rng adversary_rng_;
  // Sampler for the latest probability; rebuilt when it changes.
  std::shared_ptr<const BinomialSampler> sampler_;
  std::optional<VoteRecord> last_votes_;
  std::optional<VoteRecord> last_honest_;
  uint64_t rounds_ = 0;
};

// Whether a vote count elects the first candidate.
bool FirstCandidateWins(const VoteRecord& votes);

}  // namespace bboxer

#endif  // BBOXER_RETROFIT_ORACLES_H_
