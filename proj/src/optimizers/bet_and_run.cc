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

#include "bboxer/bet_and_run.h"

#include <algorithm>
#include <cmath>

#include "bboxer/bounds.h"
#include "bboxer/errors.h"
#include "bboxer/rng.h"

namespace bboxer {
namespace {

constexpr uint64_t kLaneKeyStride = uint64_t{1} << 48;

}  // namespace

BetAndRun::BetAndRun(std::string id, const ParamVector& initial, std::size_t count,
                     SubOptimizerFactory factory, double alpha, uint64_t budget,
                     uint64_t seed, bool restart)
    : Optimizer(std::move(id), initial.size()),
      factory_(std::move(factory)),
      seed_(seed),
      restart_(restart) {
  if (count < 2) throw ConfigError(this->id() + ": needs at least two sub-runs");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ConfigError(this->id() + ": alpha must lie in (0, 1]");
  }
  sub_budget_ = static_cast<uint64_t>(
      std::floor(alpha * static_cast<double>(budget) / static_cast<double>(count)));
  if (sub_budget_ < 1) {
    throw ConfigError(this->id() + ": sub-run budget floor(alpha*b/n) is 0 for b=" +
                      std::to_string(budget));
  }
  racing_steps_ = sub_budget_ * count;
  finishing_budget_ = budget - racing_steps_;
  for (std::size_t i = 0; i < count; ++i) {
    Lane lane;
    lane.optimizer = factory_(i, initial, sub_budget_,
                              DeriveSeed(seed, "bet-and-run/" + std::to_string(i)));
    if (lane.optimizer->dimension() != initial.size()) {
      throw ConfigError(this->id() + ": sub-run dimension mismatch");
    }
    lane.segments.push_back({1, i * sub_budget_ + 1});
    lanes_.push_back(std::move(lane));
  }
}

BetAndRun::BetAndRun(const BetAndRun& other)
    : Optimizer(other),
      factory_(other.factory_),
      seed_(other.seed_),
      sub_budget_(other.sub_budget_),
      racing_steps_(other.racing_steps_),
      finishing_budget_(other.finishing_budget_),
      restart_(other.restart_),
      selecting_(other.selecting_),
      winner_(other.winner_),
      finisher_(other.finisher_) {
  for (const Lane& lane : other.lanes_) {
    lanes_.push_back({lane.optimizer->Clone(), lane.zero_key, lane.segments});
  }
}

std::size_t BetAndRun::ActiveLane() const {
  if (asked() == 0) return 0;
  if (InRace()) return static_cast<std::size_t>((asked() - 1) / sub_budget_);
  return finisher_;
}

CandidateKey BetAndRun::Translate(std::size_t lane, CandidateKey local) const {
  const Lane& l = lanes_[lane];
  if (local == kInitialKey) return l.zero_key;
  if (local >= kDetachedKeyBase) {
    return kDetachedKeyBase + (lane + 1) * kLaneKeyStride + (local - kDetachedKeyBase);
  }
  auto it = std::upper_bound(
      l.segments.begin(), l.segments.end(), local,
      [](uint64_t key, const std::pair<uint64_t, uint64_t>& s) { return key < s.first; });
  --it;
  return it->second + (local - it->first);
}

ParamVector BetAndRun::Propose() {
  // asked() is not yet incremented: the pending step is asked() + 1.
  const uint64_t step = asked() + 1;
  const std::size_t lane =
      step <= racing_steps_ ? static_cast<std::size_t>((step - 1) / sub_budget_) : finisher_;
  return lanes_[lane].optimizer->Ask();
}

uint32_t BetAndRun::NumCases() const {
  const uint32_t k = lanes_[ActiveLane()].optimizer->NumCases();
  if (LastRacingStep()) return k * static_cast<uint32_t>(lanes_.size());
  return k;
}

uint32_t BetAndRun::PartCases() const { return Request().cases; }

ComparisonRequest BetAndRun::SelectionRequest() const {
  ComparisonRequest r;
  r.kind = CompareKind::kSelectBest;
  r.cases = static_cast<uint32_t>(lanes_.size());
  for (std::size_t i = 0; i < lanes_.size(); ++i) {
    const Optimizer& opt = *lanes_[i].optimizer;
    const std::optional<CandidateKey> local = opt.RecommendationKey();
    CandidateKey key = kDetachedKeyBase + i;
    if (local && *local < kDetachedKeyBase) key = Translate(i, *local);
    r.candidates.push_back({key, opt.Recommend()});
  }
  return r;
}

ComparisonRequest BetAndRun::Request() const {
  if (selecting_) return SelectionRequest();
  const std::size_t lane = ActiveLane();
  ComparisonRequest r = lanes_[lane].optimizer->Request();
  for (Candidate& c : r.candidates) c.key = Translate(lane, c.key);
  return r;
}

bool BetAndRun::StepComplete() const {
  if (selecting_) return false;
  return lanes_[ActiveLane()].optimizer->StepComplete() &&
         (!LastRacingStep() || winner_.has_value());
}

void BetAndRun::Update(uint32_t choice) {
  if (selecting_) {
    selecting_ = false;
    winner_ = choice - 1;
    finisher_ = *winner_;
    if (finishing_budget_ == 0) return;
    if (restart_) {
      const ComparisonRequest sel = SelectionRequest();
      Lane lane;
      lane.optimizer = factory_(*winner_, sel.candidates[*winner_].point, finishing_budget_,
                                DeriveSeed(seed_, "bet-and-run/restart"));
      lane.zero_key = sel.candidates[*winner_].key;
      lane.segments.push_back({1, racing_steps_ + 1});
      lanes_.push_back(std::move(lane));
      finisher_ = lanes_.size() - 1;
    } else {
      lanes_[finisher_].segments.push_back({sub_budget_ + 1, racing_steps_ + 1});
    }
    return;
  }
  Optimizer& opt = *lanes_[ActiveLane()].optimizer;
  opt.Tell(choice);
  if (LastRacingStep() && opt.StepComplete()) selecting_ = true;
}

ParamVector BetAndRun::Recommendation() const {
  if (winner_) return lanes_[finisher_].optimizer->Recommend();
  return lanes_[ActiveLane()].optimizer->Recommend();
}

std::optional<CandidateKey> BetAndRun::RecommendationKey() const {
  if (asked() == 0) return std::nullopt;
  const std::size_t lane = winner_ ? finisher_ : ActiveLane();
  const std::optional<CandidateKey> local = lanes_[lane].optimizer->RecommendationKey();
  if (!local) return std::nullopt;
  return Translate(lane, *local);
}

double BetAndRun::StateCountLog2(std::span<const ChoiceRecord> records) const {
  const std::size_t n = lanes_.size();
  std::vector<double> racing(n, 0.0);
  double finishing = 0.0;
  for (std::size_t t = 0; t < records.size(); ++t) {
    double bits = std::log2(static_cast<double>(records[t].k));
    if (t + 1 == racing_steps_) bits -= std::log2(static_cast<double>(n));
    if (t < racing_steps_) {
      racing[t / sub_budget_] += bits;
    } else {
      finishing += bits;
    }
  }
  double total = BetAndRunStatesLog2(racing) + finishing;
  // Before the selection the winner is not yet known: no sum over sub-runs.
  if (records.size() < racing_steps_) total = TraceBits(records);
  return total;
}

}  // namespace bboxer
