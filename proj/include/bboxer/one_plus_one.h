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

#ifndef BBOXER_ONE_PLUS_ONE_H_
#define BBOXER_ONE_PLUS_ONE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "bboxer/optimizer.h"
#include "bboxer/rng.h"

namespace bboxer {

// (1+1)-ES with the one-fifth success rule: the child x + sigma * N(0, I)
// replaces the incumbent when at least as good; sigma doubles on success and
// shrinks by 2^(-1/4) on failure. k = 2 at every step.
class OneFifthEs : public Optimizer {
 public:
  static constexpr double kSuccessFactor = 2.0;
  static constexpr double kFailureFactor = 0.8408964152537145;  // 2^(-1/4)

  OneFifthEs(const ParamVector& initial, uint64_t seed, double sigma = 1.0);

  std::unique_ptr<Optimizer> Clone() const override {
    return std::unique_ptr<Optimizer>(new OneFifthEs(*this));
  }
  uint32_t NumCases() const override { return 2; }
  ComparisonRequest Request() const override;
  std::optional<CandidateKey> RecommendationKey() const override { return incumbent_key_; }

  double sigma() const { return sigma_; }
  const ParamVector& current() const { return current_; }

 protected:
  OneFifthEs(const OneFifthEs&) = default;

  ParamVector Propose() override;
  void Update(uint32_t choice) override;
  ParamVector Recommendation() const override { return current_; }

 private:
  ParamVector current_;
  CandidateKey incumbent_key_ = kInitialKey;
  ParamVector child_;
  double sigma_;
  Rng rng_;
};

enum class MutationSchedule { kDiscrete, kLengler, kPortfolio, kFastGa };

// Mutation probability at step i (1-based) of a run of budget b in dimension d.
//   discrete:  1/d
//   lengler:   max(1/d, 0.5/(i+1))
//   portfolio: uniform on (0, 1]
//   fastga:    alpha/d, P(alpha = a) ~ a^-beta on {1, ..., max(1, d/2)}
double ScheduleP(MutationSchedule schedule, uint64_t i, uint64_t b, std::size_t d,
                 Rng& rng, double beta = 1.5);

// Each coordinate is independently replaced by a standard normal draw with
// probability p; draws are repeated until the child differs from the parent.
// The first replaced index is sampled from its distribution conditioned on at
// least one replacement, so tiny p does not spin.
ParamVector DiscreteMutation(const ParamVector& parent, double p, Rng& rng);

// Elitist discrete (1+1) evolutionary algorithm. With `crossover` the mutated
// child keeps each parent coordinate with probability 1/2 (colengler).
class DiscreteEa : public Optimizer {
 public:
  DiscreteEa(std::string id, const ParamVector& initial, uint64_t seed, uint64_t budget,
             MutationSchedule schedule, bool crossover = false, double beta = 1.5);

  std::unique_ptr<Optimizer> Clone() const override {
    return std::unique_ptr<Optimizer>(new DiscreteEa(*this));
  }
  uint32_t NumCases() const override { return 2; }
  ComparisonRequest Request() const override;
  std::optional<CandidateKey> RecommendationKey() const override { return incumbent_key_; }

  const ParamVector& current() const { return current_; }
  double last_p() const { return last_p_; }

 protected:
  DiscreteEa(const DiscreteEa&) = default;

  ParamVector Propose() override;
  void Update(uint32_t choice) override;
  ParamVector Recommendation() const override { return current_; }

 private:
  ParamVector current_;
  CandidateKey incumbent_key_ = kInitialKey;
  ParamVector child_;
  uint64_t budget_;
  MutationSchedule schedule_;
  bool crossover_;
  double beta_;
  double last_p_ = 0.0;
  Rng rng_;
};

}  // namespace bboxer

#endif  // BBOXER_ONE_PLUS_ONE_H_
