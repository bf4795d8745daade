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

#ifndef BBOXER_POISONING_H_
#define BBOXER_POISONING_H_

#include <cstdint>
#include <string>

#include "bboxer/retrofit_oracles.h"

namespace bboxer {

enum class AdversaryKind {
  // Moves k votes across the majority boundary, against the honest outcome.
  kWorstCase,
  // Flips k voters chosen uniformly at random.
  kRandom,
};

AdversaryKind ParseAdversaryKind(const std::string& name);

VoteAdversary MakeAdversary(AdversaryKind kind, uint64_t k);

struct PoisoningConfig {
  std::string algorithm = "onefifth";
  std::size_t dim = 4;
  uint64_t budget = 20;    // b rounds
  uint64_t users = 10000;  // n voters per round
  uint64_t flips = 1;      // k
  // Probability that a user prefers the newer model; 1/2 is the worst case.
  double f0 = 0.5;
  AdversaryKind adversary = AdversaryKind::kWorstCase;
  uint64_t trials = 1000;
  uint64_t seed = 1;
  int threads = 1;
};

struct PoisoningReport {
  uint64_t trials = 0;
  uint64_t divergences = 0;
  double rate = 0.0;
  double standard_error = 0.0;
  // 1 - (1 - q)^b with q the exact per-round probability that k flips change
  // the outcome under the tie rule.
  double predicted = 0.0;
  double per_round_exact = 0.0;
  // Probability of the single-round interval [n/2 - k, n/2 + k].
  double per_round_interval = 0.0;
  double stated_bound = 0.0;
  double corrected_bound = 0.0;
  bool stated_vacuous = false;
};

// Runs each trial twice with the same votes, clean and poisoned, and counts
// final points that differ bitwise. Trial t uses seeds derived from
// (seed, t), so the report does not depend on the thread count.
PoisoningReport SimulatePoisonedRetrofit(const PoisoningConfig& config);

}  // namespace bboxer

#endif  // BBOXER_POISONING_H_
