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

#ifndef BBOXER_BOUNDS_H_
#define BBOXER_BOUNDS_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "bboxer/trace.h"

namespace bboxer {

// Risk that one fixed model's empirical loss on s examples deviates from its
// expected loss by more than epsilon, losses in [0, 1].
//   Hoeffding: 2 exp(-2 s eps^2)
//   Bennett:   2 exp(-s eps h1(eps / sigma^2)),  h1(l) = (1 + 1/l) ln(1 + l) - 1
// The Log* variants return the natural log and never underflow.
double HoeffdingDelta(uint64_t s, double epsilon);
double LogHoeffdingDelta(uint64_t s, double epsilon);
double BennettH1(double lambda);
double BennettDelta(uint64_t s, double epsilon, double sigma);
double LogBennettDelta(uint64_t s, double epsilon, double sigma);

// Largest budget b such that 2^b * delta_one <= delta for an optimizer with
// k_i <= 2:
//   Hoeffding: floor((ln delta + 2 s eps^2) / ln 2 - 1)
//   Bennett:   floor(s eps h1(eps / sigma^2) / ln 2 + ln delta / ln 2 - 1)
// A negative right-hand side gives budget 0 with feasible = false.
struct BudgetBound {
  uint64_t budget = 0;
  bool feasible = false;
  double unfloored = 0.0;
};
BudgetBound MaxBudgetHoeffding(uint64_t s, double epsilon, double delta);
BudgetBound MaxBudgetBennett(uint64_t s, double epsilon, double sigma, double delta);

// Overfitting risk N * delta_one, and the version uniform over the b iterates,
// b * N * delta_one. Values above 1 are kept raw and flagged vacuous.
struct RiskReport {
  double log_delta_one = 0.0;
  double state_count_log2 = 0.0;
  double log_risk = 0.0;  // natural log
  double risk = 0.0;      // raw, may exceed 1 or be +inf
  double risk_clamped = 0.0;
  bool vacuous = false;
  double log_uniform_risk = 0.0;
  double uniform_risk = 0.0;
};
RiskReport OverfitRisk(double log_delta_one, double state_count_log2, uint64_t budget);

// Sum of log2 k_i of a branching profile.
double ProfileLog2(std::span<const uint32_t> k);
// Geometric mean of the branching factors, 2^(sum log2 k_i / b).
double AverageBranching(double state_count_log2, uint64_t budget);
double AverageBranching(std::span<const ChoiceRecord> records);

// log2 of the state-count bounds of population strategies:
//   one_plus_lambda  (lambda + 1)^((b - 1) / lambda)
//   mu_comma_lambda  C(lambda, mu)^((b - mu) / lambda)
//   mu_plus_lambda   C(lambda + mu, mu)^((b - mu) / lambda)
//   de               2^b
//   de_ctb           3^b
double StrategyStateCountLog2(std::string_view kind, uint64_t mu, uint64_t lambda,
                              uint64_t budget);

// log2 of sum_i 2^(c_i): bet-and-run over sub-runs with log2 state counts c_i.
double BetAndRunStatesLog2(std::span<const double> sub_state_counts_log2);

// Randomized seeds: the worst case over the per-seed state counts.
double SupOverSeedsLog2(std::span<const double> per_seed_log2);

}  // namespace bboxer

#endif  // BBOXER_BOUNDS_H_
