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

#include "bboxer/poisoning.h"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "bboxer/errors.h"
#include "bboxer/flip_bounds.h"
#include "bboxer/run.h"

namespace bboxer {

AdversaryKind ParseAdversaryKind(const std::string& name) {
  if (name == "worst") return AdversaryKind::kWorstCase;
  if (name == "random") return AdversaryKind::kRandom;
  throw ConfigError("unknown adversary '" + name + "' (expected worst or random)");
}

VoteAdversary MakeAdversary(AdversaryKind kind, uint64_t k) {
  if (kind == AdversaryKind::kWorstCase) {
    return [k](const VoteRecord& honest, Rng&) {
      VoteRecord v = honest;
      if (FirstCandidateWins(honest)) {
        v.ones = honest.ones - std::min(k, honest.ones);
      } else {
        v.ones = std::min(honest.n, honest.ones + k);
      }
      return v;
    };
  }
  return [k](const VoteRecord& honest, Rng& rng) {
    // Draw k distinct voters without replacement; each flips its vote.
    VoteRecord v = honest;
    uint64_t ones_left = honest.ones;
    uint64_t pool = honest.n;
    uint64_t ones_hit = 0;
    const uint64_t draws = std::min(k, honest.n);
    for (uint64_t i = 0; i < draws; ++i, --pool) {
      if (rng.UniformInt(pool) < ones_left) {
        --ones_left;
        ++ones_hit;
      }
    }
    v.ones = honest.ones - ones_hit + (draws - ones_hit);
    return v;
  };
}

PoisoningReport SimulatePoisonedRetrofit(const PoisoningConfig& config) {
  if (config.users < 1 || config.flips > config.users) {
    throw PreconditionError("need 1 <= users and flips <= users");
  }
  if (config.budget < 1) throw PreconditionError("budget must be at least 1");
  if (!(config.f0 >= 0.0 && config.f0 <= 1.0)) throw PreconditionError("f0 outside [0, 1]");
  const double f0 = config.f0;
  const PreferenceModel model = [f0](const Candidate&, const Candidate&) { return f0; };
  const ParamVector x0(config.dim, 0.0);

  std::vector<uint8_t> diverged(config.trials, 0);
  auto run_trial = [&](uint64_t t) {
    const uint64_t trial_seed = DeriveSeed(config.seed, "poison/trial/" + std::to_string(t));
    PreferenceOracle clean(config.users, model, trial_seed);
    PreferenceOracle poisoned(config.users, model, trial_seed,
                              config.flips ? MakeAdversary(config.adversary, config.flips)
                                           : VoteAdversary{});
    const RunResult a = RunBboxer(config.algorithm, {}, x0, clean, config.budget, trial_seed);
    const RunResult b = RunBboxer(config.algorithm, {}, x0, poisoned, config.budget, trial_seed);
    diverged[t] = a.final_x != b.final_x;
  };
  const uint64_t workers =
      std::clamp<uint64_t>(static_cast<uint64_t>(std::max(1, config.threads)), 1,
                           std::max<uint64_t>(1, config.trials));
  if (workers == 1) {
    for (uint64_t t = 0; t < config.trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    for (uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (uint64_t t = w; t < config.trials; t += workers) run_trial(t);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  PoisoningReport r;
  r.trials = config.trials;
  r.divergences = static_cast<uint64_t>(std::count(diverged.begin(), diverged.end(), 1));
  if (r.trials > 0) {
    r.rate = static_cast<double>(r.divergences) / static_cast<double>(r.trials);
  }
  r.per_round_exact = TieRuleFlipProb(config.users, f0, config.flips);
  r.per_round_interval = ExactFlipProb(config.users, f0, config.flips);
  r.predicted = MultiRoundDivergence(r.per_round_exact, config.budget);
  if (r.trials > 0) {
    r.standard_error =
        std::sqrt(r.predicted * (1.0 - r.predicted) / static_cast<double>(r.trials));
  }
  const RunBound stated = RunPoisoningBound(config.budget, config.users, config.flips);
  r.stated_bound = stated.value;
  r.stated_vacuous = stated.vacuous;
  r.corrected_bound =
      CorrectedRunPoisoningBound(config.budget, config.users, config.flips).value;
  return r;
}

}  // namespace bboxer
