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

#ifndef BBOXER_PARTICLE_SWARM_H_
#define BBOXER_PARTICLE_SWARM_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bboxer/optimizer.h"
#include "bboxer/rng.h"

namespace bboxer {

struct PsoParams {
  uint32_t swarm = 40;
  double inertia = 0.729;    // w
  double cognitive = 1.49;   // c1
  double social = 1.49;      // c2
  double init_scale = 1.0;
  // Compare with personal best and global best (k = 3) instead of the global
  // best only (k = 2).
  bool global_best_outcome = false;
};

// Particle swarm optimization. Particle 0 starts at the initial point, the
// others around it; velocities start at zero. Each step moves one particle
//   v <- w v + c1 r1 (pbest - x) + c2 r2 (gbest - x),  x <- x + v
// and compares the new position with the global best (k = 2): a win updates
// both the particle's best and the global best. With gbest3 the personal
// best is compared as well (k = 3), so it can improve on its own.

class ParticleSwarm : public Optimizer {
 public:
  ParticleSwarm(const ParamVector& initial, uint64_t seed, const PsoParams& params);

  std::unique_ptr<Optimizer> Clone() const override {
    return std::unique_ptr<Optimizer>(new ParticleSwarm(*this));
  }
  uint32_t NumCases() const override { return params_.global_best_outcome ? 3 : 2; }
  ComparisonRequest Request() const override;
  std::optional<CandidateKey> RecommendationKey() const override {
    return best_keys_[champion_];
  }

  const std::vector<ParamVector>& positions() const { return positions_; }
  const std::vector<ParamVector>& personal_bests() const { return bests_; }
  uint32_t champion() const { return champion_; }

 protected:
  ParticleSwarm(const ParticleSwarm&) = default;

  ParamVector Propose() override;
  void Update(uint32_t choice) override;
  ParamVector Recommendation() const override { return bests_[champion_]; }

 private:
  PsoParams params_;
  std::vector<ParamVector> positions_;
  std::vector<ParamVector> velocities_;
  std::vector<ParamVector> bests_;
  std::vector<CandidateKey> best_keys_;
  uint32_t champion_ = 0;
  uint32_t target_ = 0;
  bool initializing_;
  uint32_t next_particle_ = 0;
  ParamVector pending_x_, pending_v_;
  Rng rng_;
};

}  // namespace bboxer

#endif  // BBOXER_PARTICLE_SWARM_H_
