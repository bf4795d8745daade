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

#include "bboxer/differential_evolution.h"

#include <algorithm>
#include <cmath>

#include "bboxer/errors.h"

namespace bboxer {

DifferentialEvolution::DifferentialEvolution(const ParamVector& initial, uint64_t seed,
                                             const DeParams& params)
    : Optimizer(params.variant == DeVariant::kRand1Bin ? "de" : "de-ctb", initial.size()),
      params_(params),
      variant_(params.variant),
      rng_(Rng::Derive(seed, "de")) {
  if (params.population < 4) throw ConfigError(id() + ": popsize must be at least 4");
  if (!std::isfinite(params.weight)) throw ConfigError(id() + ": F must be finite");
  if (!(params.crossover >= 0.0 && params.crossover <= 1.0)) {
    throw ConfigError(id() + ": CR must lie in [0, 1]");
  }
  if (!(params.init_scale >= 0.0) || !std::isfinite(params.init_scale)) {
    throw ConfigError(id() + ": init_scale must be non-negative");
  }
  members_.push_back(initial);
  keys_.push_back(kInitialKey);
}

uint32_t DifferentialEvolution::DrawOther(const std::vector<uint32_t>& taken) {
  const uint32_t n = static_cast<uint32_t>(members_.size());
  for (;;) {
    const auto r = static_cast<uint32_t>(rng_.UniformInt(n));
    if (std::find(taken.begin(), taken.end(), r) == taken.end()) return r;
  }
}

ParamVector DifferentialEvolution::Propose() {
  const std::size_t d = dimension();
  if (initializing_) {
    target_ = static_cast<uint32_t>(members_.size());
    child_ = members_[0];
    for (double& v : child_) v += params_.init_scale * rng_.Normal();
    return child_;
  }
  const uint32_t i = next_member_;
  target_ = i;
  const ParamVector& x = members_[i];
  ParamVector mutant(d);
  if (variant_ == DeVariant::kRand1Bin) {
    const uint32_t a = DrawOther({i});
    const uint32_t b = DrawOther({i, a});
    const uint32_t c = DrawOther({i, a, b});
    for (std::size_t j = 0; j < d; ++j) {
      mutant[j] = members_[a][j] + params_.weight * (members_[b][j] - members_[c][j]);
    }
  } else {
    const uint32_t b = DrawOther({i});
    const uint32_t c = DrawOther({i, b});
    const ParamVector& best = members_[champion_];
    for (std::size_t j = 0; j < d; ++j) {
      mutant[j] = x[j] + params_.weight * (best[j] - x[j]) +
                  params_.weight * (members_[b][j] - members_[c][j]);
    }
  }
  const auto jrand = static_cast<std::size_t>(rng_.UniformInt(d));
  child_ = x;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == jrand || rng_.Uniform() < params_.crossover) child_[j] = mutant[j];
  }
  return child_;
}

ComparisonRequest DifferentialEvolution::Request() const {
  const Candidate child{asked(), child_};
  const Candidate best{keys_[champion_], members_[champion_]};
  const Candidate parent =
      initializing_ ? best : Candidate{keys_[target_], members_[target_]};
  if (variant_ == DeVariant::kRand1Bin) {
    return {CompareKind::kChildVsIncumbent, 2, {child, parent}, 0};
  }
  return {CompareKind::kChildVsParentAndBest, 3, {child, parent, best}, 0};
}

void DifferentialEvolution::Update(uint32_t choice) {
  if (initializing_) {
    members_.push_back(child_);
    keys_.push_back(asked());
    const bool wins = variant_ == DeVariant::kRand1Bin ? choice == outcome::kChildWins
                                                       : choice == outcome::kNewBest;
    if (wins) champion_ = target_;
    if (members_.size() == params_.population) initializing_ = false;
    return;
  }
  bool replaced = false;
  bool new_best = false;
  if (variant_ == DeVariant::kRand1Bin) {
    replaced = choice == outcome::kChildWins;
    new_best = replaced && target_ == champion_;
  } else {
    replaced = choice != outcome::kWorseThanParent;
    new_best = choice == outcome::kNewBest;
  }
  if (replaced) {
    members_[target_] = child_;
    keys_[target_] = asked();
  }
  if (new_best) champion_ = target_;
  next_member_ = (next_member_ + 1) % params_.population;
}

}  // namespace bboxer
