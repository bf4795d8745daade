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

#include "bboxer/one_plus_one.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bboxer/errors.h"

namespace bboxer {

OneFifthEs::OneFifthEs(const ParamVector& initial, uint64_t seed, double sigma)
    : Optimizer("onefifth", initial.size()),
      current_(initial),
      sigma_(sigma),
      rng_(Rng::Derive(seed, "onefifth")) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ConfigError("onefifth: sigma must be positive and finite");
  }
}

ParamVector OneFifthEs::Propose() {
  child_ = current_;
  for (double& v : child_) v += sigma_ * rng_.Normal();
  return child_;
}

ComparisonRequest OneFifthEs::Request() const {
  return {CompareKind::kChildVsIncumbent, 2,
          {{asked(), child_}, {incumbent_key_, current_}}, 0};
}

void OneFifthEs::Update(uint32_t choice) {
  if (choice == outcome::kChildWins) {
    current_ = child_;
    incumbent_key_ = asked();
    sigma_ *= kSuccessFactor;
  } else {
    sigma_ *= kFailureFactor;
  }
}

double ScheduleP(MutationSchedule schedule, uint64_t i, uint64_t b, std::size_t d,
                 Rng& rng, double beta) {
  if (d == 0) throw PreconditionError("ScheduleP: dimension must be positive");
  if (i < 1 || (b > 0 && i > b)) throw PreconditionError("ScheduleP: step outside [1, b]");
  const double inv_d = 1.0 / static_cast<double>(d);
  switch (schedule) {
    case MutationSchedule::kDiscrete:
      return inv_d;
    case MutationSchedule::kLengler:
      return std::max(inv_d, 0.5 / static_cast<double>(i + 1));
    case MutationSchedule::kPortfolio:
      return rng.UniformPositive();
    case MutationSchedule::kFastGa: {
      const std::size_t top = std::max<std::size_t>(1, d / 2);
      double total = 0.0;
      for (std::size_t a = 1; a <= top; ++a) total += std::pow(static_cast<double>(a), -beta);
      double u = rng.Uniform() * total;
      std::size_t alpha = top;
      for (std::size_t a = 1; a <= top; ++a) {
        u -= std::pow(static_cast<double>(a), -beta);
        if (u < 0.0) {
          alpha = a;
          break;
        }
      }
      return static_cast<double>(alpha) * inv_d;
    }
  }
  return inv_d;
}

ParamVector DiscreteMutation(const ParamVector& parent, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw PreconditionError("DiscreteMutation: p outside (0, 1]");
  const std::size_t d = parent.size();
  ParamVector child;
  do {
    child = parent;
    std::size_t first = 0;
    if (p < 1.0) {
      // Inverse CDF of the first replaced index given that there is one.
      const double none = std::pow(1.0 - p, static_cast<double>(d));
      const double u = rng.Uniform();
      const double j = std::floor(std::log1p(-u * (1.0 - none)) / std::log1p(-p));
      first = std::min<std::size_t>(d - 1, j > 0.0 ? static_cast<std::size_t>(j) : 0);
    }
    child[first] = rng.Normal();
    for (std::size_t j = first + 1; j < d; ++j) {
      if (p >= 1.0 || rng.Uniform() < p) child[j] = rng.Normal();
    }
  } while (child == parent);
  return child;
}

DiscreteEa::DiscreteEa(std::string id, const ParamVector& initial, uint64_t seed,
                       uint64_t budget, MutationSchedule schedule, bool crossover,
                       double beta)
    : Optimizer(id, initial.size()),
      current_(initial),
      budget_(budget),
      schedule_(schedule),
      crossover_(crossover),
      beta_(beta),
      rng_(Rng::Derive(seed, id)) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ConfigError(id + ": beta must be positive");
}

ParamVector DiscreteEa::Propose() {
  const uint64_t step = asked() + 1;
  last_p_ = ScheduleP(schedule_, step, std::max(budget_, step), dimension(), rng_, beta_);
  do {
    child_ = DiscreteMutation(current_, last_p_, rng_);
    if (crossover_) {
      for (std::size_t j = 0; j < child_.size(); ++j) {
        if (rng_.Uniform() < 0.5) child_[j] = current_[j];
      }
    }
  } while (child_ == current_);
  return child_;
}

ComparisonRequest DiscreteEa::Request() const {
  return {CompareKind::kChildVsIncumbent, 2,
          {{asked(), child_}, {incumbent_key_, current_}}, 0};
}

void DiscreteEa::Update(uint32_t choice) {
  if (choice == outcome::kChildWins) {
    current_ = child_;
    incumbent_key_ = asked();
  }
}

}  // namespace bboxer
