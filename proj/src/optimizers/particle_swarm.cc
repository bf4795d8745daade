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

#include "bboxer/particle_swarm.h"

#include <cmath>

#include "bboxer/errors.h"

namespace bboxer {

ParticleSwarm::ParticleSwarm(const ParamVector& initial, uint64_t seed,
                             const PsoParams& params)
    : Optimizer("pso", initial.size()),
      params_(params),
      initializing_(params.swarm > 1),
      rng_(Rng::Derive(seed, "pso")) {
  if (params.swarm < 1) throw ConfigError("pso: swarm must be at least 1");
  for (double c : {params.inertia, params.cognitive, params.social}) {
    if (!std::isfinite(c)) throw ConfigError("pso: coefficients must be finite");
  }
  if (!(params.init_scale >= 0.0) || !std::isfinite(params.init_scale)) {
    throw ConfigError("pso: init_scale must be non-negative");
  }
  positions_.push_back(initial);
  velocities_.emplace_back(initial.size(), 0.0);
  bests_.push_back(initial);
  best_keys_.push_back(kInitialKey);
}

ParamVector ParticleSwarm::Propose() {
  const std::size_t d = dimension();
  if (initializing_) {
    target_ = static_cast<uint32_t>(positions_.size());
    pending_x_ = positions_[0];
    for (double& v : pending_x_) v += params_.init_scale * rng_.Normal();
    pending_v_.assign(d, 0.0);
    return pending_x_;
  }
  const uint32_t i = next_particle_;
  target_ = i;
  const ParamVector& x = positions_[i];
  const ParamVector& g = bests_[champion_];
  pending_v_ = velocities_[i];
  pending_x_ = x;
  for (std::size_t j = 0; j < d; ++j) {
    const double r1 = rng_.Uniform();
    const double r2 = rng_.Uniform();
    pending_v_[j] = params_.inertia * pending_v_[j] +
                    params_.cognitive * r1 * (bests_[i][j] - x[j]) +
                    params_.social * r2 * (g[j] - x[j]);
    pending_x_[j] += pending_v_[j];
  }
  return pending_x_;
}

ComparisonRequest ParticleSwarm::Request() const {
  const Candidate child{asked(), pending_x_};
  const Candidate best{best_keys_[champion_], bests_[champion_]};
  if (!params_.global_best_outcome) {
    return {CompareKind::kChildVsIncumbent, 2, {child, best}, 0};
  }
  // A new particle has no personal best yet: parent and best coincide.
  const Candidate own = initializing_ ? best : Candidate{best_keys_[target_], bests_[target_]};
  return {CompareKind::kChildVsParentAndBest, 3, {child, own, best}, 0};
}

void ParticleSwarm::Update(uint32_t choice) {
  const bool k3 = params_.global_best_outcome;
  if (initializing_) {
    positions_.push_back(pending_x_);
    velocities_.push_back(pending_v_);
    bests_.push_back(pending_x_);
    best_keys_.push_back(asked());
    if (choice == (k3 ? outcome::kNewBest : outcome::kChildWins)) champion_ = target_;
    if (positions_.size() == params_.swarm) initializing_ = false;
    return;
  }
  positions_[target_] = pending_x_;
  velocities_[target_] = pending_v_;
  const bool improved = k3 ? choice != outcome::kWorseThanParent
                           : choice == outcome::kChildWins;
  if (improved) {
    bests_[target_] = pending_x_;
    best_keys_[target_] = asked();
  }
  if (choice == (k3 ? outcome::kNewBest : outcome::kChildWins)) champion_ = target_;
  next_particle_ = (next_particle_ + 1) % params_.swarm;
}

}  // namespace bboxer
