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

#ifndef BBOXER_BET_AND_RUN_H_
#define BBOXER_BET_AND_RUN_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bboxer/optimizer.h"

namespace bboxer {

// Builds sub-optimizer `index` at `initial` with its own budget and seed.
using SubOptimizerFactory = std::function<std::unique_ptr<Optimizer>(
    std::size_t index, const ParamVector& initial, uint64_t budget, uint64_t seed)>;

// Runs n independent sub-optimizers one after the other on floor(alpha b / n)
// steps each, picks the one whose recommendation is best and spends the
// remaining steps on it.
//
// The winner selection (n outcomes) is a second decision round of the last
// racing step, so that step records k = k_last * n and the trace keeps one
// record per step. With `restart`, the finishing phase starts a fresh
// instance of the winning algorithm at its recommendation instead of
// continuing the winner's adapted state.
class BetAndRun : public Optimizer {
 public:
  BetAndRun(std::string id, const ParamVector& initial, std::size_t count,
            SubOptimizerFactory factory, double alpha, uint64_t budget, uint64_t seed,
            bool restart = false);
  BetAndRun(const BetAndRun& other);

  std::unique_ptr<Optimizer> Clone() const override {
    return std::unique_ptr<Optimizer>(new BetAndRun(*this));
  }
  uint32_t NumCases() const override;
  ComparisonRequest Request() const override;
  bool StepComplete() const override;
  std::optional<CandidateKey> RecommendationKey() const override;

  // log2 of the sum over sub-runs of their racing state counts, plus the
  // finishing bits: the bet-and-run state bound rather than the plain product
  // of the recorded k.
  double StateCountLog2(std::span<const ChoiceRecord> records) const override;

  std::size_t count() const { return lanes_.size(); }
  uint64_t sub_budget() const { return sub_budget_; }
  uint64_t finishing_budget() const { return finishing_budget_; }
  std::optional<std::size_t> winner() const { return winner_; }
  const Optimizer& sub(std::size_t i) const { return *lanes_[i].optimizer; }

 protected:
  ParamVector Propose() override;
  void Update(uint32_t choice) override;
  ParamVector Recommendation() const override;
  uint32_t PartCases() const override;

 private:
  struct Lane {
    std::unique_ptr<Optimizer> optimizer;
    CandidateKey zero_key = kInitialKey;
    // (first local key, first global key) of each contiguous stretch of steps.
    std::vector<std::pair<uint64_t, uint64_t>> segments;
  };

  CandidateKey Translate(std::size_t lane, CandidateKey local) const;
  std::size_t ActiveLane() const;
  bool InRace() const { return asked() <= racing_steps_; }
  bool LastRacingStep() const { return asked() == racing_steps_; }
  ComparisonRequest SelectionRequest() const;

  std::vector<Lane> lanes_;
  SubOptimizerFactory factory_;
  uint64_t seed_;
  uint64_t sub_budget_;
  uint64_t racing_steps_;
  uint64_t finishing_budget_;
  bool restart_;
  bool selecting_ = false;
  std::optional<std::size_t> winner_;
  // Lane used by the finishing phase (the winner, or its restarted copy).
  std::size_t finisher_ = 0;
};

}  // namespace bboxer

#endif  // BBOXER_BET_AND_RUN_H_
