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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bboxer/bounds.h"
#include "bboxer/combinatorics.h"
#include "bboxer/errors.h"

namespace bboxer {
namespace {

TEST(Concentration, HoeffdingClosedForm) {
  EXPECT_NEAR(HoeffdingDelta(8000, 0.04), 2.0 * std::exp(-25.6), 1e-22);
  EXPECT_NEAR(LogHoeffdingDelta(8000, 0.1), std::log(2.0) - 160.0, 1e-12);
  // Far in the tail only the log form stays finite.
  EXPECT_EQ(HoeffdingDelta(1000000, 1.0), 0.0);
  EXPECT_NEAR(LogHoeffdingDelta(1000000, 1.0), std::log(2.0) - 2e6, 1e-6);
  EXPECT_THROW(HoeffdingDelta(0, 0.1), PreconditionError);
  EXPECT_THROW(HoeffdingDelta(10, -0.1), PreconditionError);
}

TEST(Concentration, BennettH1) {
  EXPECT_EQ(BennettH1(0.0), 0.0);
  EXPECT_NEAR(BennettH1(1.0), 2.0 * std::log(2.0) - 1.0, 1e-15);
  // Series and direct form agree around the switch point.
  for (double l : {9e-4, 1e-3, 1.1e-3}) {
    const double direct = (1.0 + 1.0 / l) * std::log1p(l) - 1.0;
    EXPECT_NEAR(BennettH1(l), direct, 1e-12 * direct) << l;
  }
  EXPECT_NEAR(BennettH1(1e-8), 0.5e-8, 1e-16);
  EXPECT_THROW(BennettH1(-1.0), PreconditionError);
}

TEST(Concentration, BennettBeatsHoeffdingForSmallVariance) {
  EXPECT_LT(LogBennettDelta(8000, 0.04, 0.3), LogHoeffdingDelta(8000, 0.04));
  EXPECT_NEAR(BennettDelta(8000, 0.01, 0.06),
              2.0 * std::exp(-8000 * 0.01 * BennettH1(0.01 / 0.0036)), 1e-35);
}

TEST(Budget, FloorAndFeasibility) {
  const BudgetBound b = MaxBudgetHoeffding(8000, 0.04, 0.5);
  EXPECT_EQ(b.budget, 34u);
  EXPECT_TRUE(b.feasible);
  EXPECT_NEAR(b.unfloored, (std::log(0.5) + 25.6) / std::log(2.0) - 1.0, 1e-12);
  const BudgetBound none = MaxBudgetHoeffding(10, 0.01, 0.5);
  EXPECT_FALSE(none.feasible);
  EXPECT_EQ(none.budget, 0u);
  EXPECT_EQ(MaxBudgetHoeffding(2000, 0.05, 0.5).budget, 12u);
  EXPECT_THROW(MaxBudgetHoeffding(10, 0.1, 0.0), PreconditionError);
  EXPECT_THROW(MaxBudgetBennett(10, 0.1, 0.0, 0.5), PreconditionError);
}

TEST(Budget, LinearInSampleSize) {
  // Doubling s adds exactly 2 s eps^2 / ln 2 to the budget.
  for (uint64_t s : {2000u, 20000u, 80000u}) {
    const double one = MaxBudgetHoeffding(s, 0.05, 0.5).unfloored;
    const double two = MaxBudgetHoeffding(2 * s, 0.05, 0.5).unfloored;
    EXPECT_NEAR(two - one, 2.0 * s * 0.0025 / std::log(2.0), 1e-9) << s;
  }
  EXPECT_NEAR(MaxBudgetHoeffding(400000, 0.05, 0.5).unfloored /
                  MaxBudgetHoeffding(200000, 0.05, 0.5).unfloored,
              2.0, 2e-3);
}

TEST(Budget, BudgetSatisfiesTheRiskTarget) {
  for (double eps : {0.02, 0.05, 0.1}) {
    const BudgetBound b = MaxBudgetHoeffding(5000, eps, 0.1);
    ASSERT_TRUE(b.feasible);
    const double log_delta_one = LogHoeffdingDelta(5000, eps);
    // 2^b delta_one <= delta, and one more step breaks it.
    EXPECT_LE(OverfitRisk(log_delta_one, b.budget, b.budget).log_risk, std::log(0.1) + 1e-9);
    EXPECT_GT(OverfitRisk(log_delta_one, b.budget + 1.0, b.budget).log_risk, std::log(0.1));
  }
}

TEST(Risk, VacuousFlagAndClamp) {
  const RiskReport small = OverfitRisk(std::log(1e-6), 10.0, 10);
  EXPECT_FALSE(small.vacuous);
  EXPECT_NEAR(small.risk, 1024e-6, 1e-15);
  EXPECT_NEAR(small.uniform_risk, 10 * 1024e-6, 1e-14);
  const RiskReport big = OverfitRisk(std::log(1e-3), 40.0, 40);
  EXPECT_TRUE(big.vacuous);
  EXPECT_GT(big.risk, 1.0);
  EXPECT_EQ(big.risk_clamped, 1.0);
  EXPECT_THROW(OverfitRisk(0.0, -1.0, 1), PreconditionError);
}

TEST(Profiles, AverageBranching) {
  const std::vector<uint32_t> k = {2, 2, 3, 1};
  EXPECT_NEAR(ProfileLog2(k), 2.0 + std::log2(3.0), 1e-15);
  EXPECT_NEAR(AverageBranching(ProfileLog2(k), 4), std::pow(12.0, 0.25), 1e-15);
  const std::vector<ChoiceRecord> r = {{2, 1}, {2, 2}};
  EXPECT_DOUBLE_EQ(AverageBranching(r), 2.0);
  const double triple = std::log2(3.0) + 50.0;
  EXPECT_NEAR(AverageBranching(triple, 150), 1.2692, 1e-4);
  EXPECT_THROW(AverageBranching(1.0, 0), PreconditionError);
}

TEST(Profiles, StrategyStateCounts) {
  EXPECT_DOUBLE_EQ(StrategyStateCountLog2("de", 0, 1, 100), 100.0);
  EXPECT_NEAR(StrategyStateCountLog2("de_ctb", 0, 1, 100), 100 * std::log2(3.0), 1e-12);
  EXPECT_NEAR(StrategyStateCountLog2("one_plus_lambda", 0, 4, 41), 10 * std::log2(5.0), 1e-12);
  EXPECT_NEAR(StrategyStateCountLog2("mu_comma_lambda", 5, 10, 105),
              10 * std::log2(static_cast<double>(BinomialCoefficient(10, 5))), 1e-9);
  EXPECT_NEAR(StrategyStateCountLog2("mu_plus_lambda", 2, 4, 42),
              10 * std::log2(static_cast<double>(BinomialCoefficient(6, 2))), 1e-9);
  EXPECT_THROW(StrategyStateCountLog2("mu_comma_lambda", 6, 4, 42), PreconditionError);
  EXPECT_THROW(StrategyStateCountLog2("nsga", 1, 1, 1), ConfigError);
}

TEST(Profiles, BetAndRunAndSeeds) {
  const std::vector<double> three = {50.0, 50.0, 50.0};
  EXPECT_NEAR(BetAndRunStatesLog2(three), std::log2(3.0) + 50.0, 1e-12);
  const std::vector<double> huge = {2000.0, 1.0};
  EXPECT_NEAR(BetAndRunStatesLog2(huge), 2000.0, 1e-12);
  EXPECT_DOUBLE_EQ(SupOverSeedsLog2(std::vector<double>{3.0, 7.5, 1.0}), 7.5);
  EXPECT_THROW(BetAndRunStatesLog2({}), PreconditionError);
}

}  // namespace
}  // namespace bboxer
