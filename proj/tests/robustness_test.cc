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
#include <memory>
#include <numbers>
#include <vector>

#include "bboxer/binomial.h"
#include "bboxer/dataset.h"
#include "bboxer/errors.h"
#include "bboxer/extraction.h"
#include "bboxer/flip_bounds.h"
#include "bboxer/poisoning.h"
#include "bboxer/privacy.h"
#include "bboxer/retrofit.h"
#include "bboxer/rng.h"

namespace bboxer {
namespace {

RetrofitSetup Toy(const std::string& algo, uint64_t budget, uint64_t seed) {
  RetrofitSetup s;
  s.algorithm = algo;
  s.m0 = std::make_shared<TensorModel>(MakeToyModel("linear-softmax", {4, 3, 8}, seed));
  s.spec = {ModifierKind::kFull, {"layer0"}, 0.01};
  s.budget = budget;
  s.seed = seed;
  return s;
}

TEST(Binomial, PmfSumsToOne) {
  for (double p : {0.5, 0.3, 0.99}) {
    double total = 0.0;
    for (uint64_t x = 0; x <= 200; ++x) total += BinomialPmf(200, p, x);
    EXPECT_NEAR(total, 1.0, 1e-12) << p;
  }
  EXPECT_NEAR(BinomialPmf(4, 0.5, 2), 0.375, 1e-15);
  EXPECT_EQ(BinomialPmf(4, 0.0, 0), 1.0);
  EXPECT_EQ(BinomialPmf(4, 1.0, 3), 0.0);
}

TEST(Binomial, RangeProbability) {
  EXPECT_EQ(BinomialRangeProbability(5, 0.5, 2, 3), 0.625);
  EXPECT_EQ(BinomialRangeProbability(10, 0.5, -5, 50), 1.0);
  EXPECT_EQ(BinomialRangeProbability(10, 0.5, 6, 5), 0.0);
  EXPECT_NEAR(BinomialRangeProbability(1000, 0.4, 390, 410),
              [] {
                double s = 0.0;
                for (uint64_t x = 390; x <= 410; ++x) s += BinomialPmf(1000, 0.4, x);
                return s;
              }(),
              1e-12);
}

TEST(Binomial, SamplerMatchesMoments) {
  const BinomialSampler s(10000, 0.5);
  Rng rng(4);
  double sum = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double v = static_cast<double>(s.Sample(rng));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 5000.0, 1.0);
  EXPECT_NEAR(sq / n - mean * mean, 2500.0, 100.0);
  EXPECT_EQ(BinomialSampler::Cached(100, 0.25).get(), BinomialSampler::Cached(100, 0.25).get());
}

TEST(FlipBounds, StatedConstantIsTooSmall) {
  const FlipBound b = SingleRoundFlipBound(5, 1);
  EXPECT_NEAR(b.stated, 3.0 / std::sqrt(10.0 * std::numbers::pi), 1e-15);
  EXPECT_DOUBLE_EQ(b.corrected, 2.0 * b.stated);
  EXPECT_GT(ExactFlipProb(5, 0.5, 1), b.stated);
  EXPECT_LE(ExactFlipProb(5, 0.5, 1), b.corrected);
  // The single-point bound is already exceeded at n = 100.
  EXPECT_GT(BinomialPmf(100, 0.5, 50), 1.0 / std::sqrt(200.0 * std::numbers::pi));
}

TEST(FlipBounds, RunBoundsAndPrivacyDelta) {
  const RunBound stated = RunPoisoningBound(20, 10000, 1);
  EXPECT_NEAR(stated.value, 20 * 3.0 / std::sqrt(20000.0 * std::numbers::pi), 1e-12);
  EXPECT_FALSE(stated.vacuous);
  EXPECT_DOUBLE_EQ(CorrectedRunPoisoningBound(20, 10000, 1).value, 2.0 * stated.value);
  EXPECT_TRUE(RunPoisoningBound(1000, 100, 5).vacuous);
  EXPECT_DOUBLE_EQ(PrivacyDelta(20, 10000), stated.value);
}

TEST(FlipBounds, TieRuleSetInsideInterval) {
  for (uint64_t n : {9u, 10u, 64u, 1001u}) {
    for (uint64_t k : {1u, 2u}) {
      EXPECT_LE(TieRuleFlipProb(n, 0.5, k), ExactFlipProb(n, 0.5, k) + 1e-15);
    }
  }
  // n = 10, k = 1: honest counts 4 and 5 can be turned.
  EXPECT_NEAR(TieRuleFlipProb(10, 0.5, 1), BinomialPmf(10, 0.5, 4) + BinomialPmf(10, 0.5, 5),
              1e-14);
  EXPECT_DOUBLE_EQ(MultiRoundDivergence(0.0, 10), 0.0);
  EXPECT_DOUBLE_EQ(MultiRoundDivergence(0.5, 0), 0.0);
  EXPECT_DOUBLE_EQ(MultiRoundDivergence(0.5, 2), 0.75);
}

TEST(Poisoning, WorstCaseMatchesPrediction) {
  PoisoningConfig c;
  c.users = 101;
  c.budget = 10;
  c.trials = 3000;
  const PoisoningReport r = SimulatePoisonedRetrofit(c);
  EXPECT_EQ(r.trials, 3000u);
  EXPECT_NEAR(r.rate, r.predicted, 4.0 * r.standard_error);
  EXPECT_LE(r.predicted, r.corrected_bound);
}

TEST(Poisoning, RandomAdversaryIsWeaker) {
  PoisoningConfig c;
  c.users = 101;
  c.budget = 10;
  c.trials = 2000;
  const double worst = SimulatePoisonedRetrofit(c).rate;
  c.adversary = AdversaryKind::kRandom;
  EXPECT_LT(SimulatePoisonedRetrofit(c).rate, worst);
  EXPECT_THROW(ParseAdversaryKind("clever"), ConfigError);
}

TEST(Poisoning, ThreadCountDoesNotMatter) {
  PoisoningConfig c;
  c.users = 1001;
  c.trials = 400;
  const PoisoningReport one = SimulatePoisonedRetrofit(c);
  c.threads = 3;
  EXPECT_EQ(SimulatePoisonedRetrofit(c).divergences, one.divergences);
}

TEST(Poisoning, NoFlipsNoDivergence) {
  PoisoningConfig c;
  c.users = 11;
  c.flips = 0;
  c.trials = 200;
  EXPECT_EQ(SimulatePoisonedRetrofit(c).divergences, 0u);
}

TEST(Privacy, PreservingPairsKeepOutputs) {
  const RetrofitSetup setup = Toy("onefifth", 40, 3);
  const auto d1 = std::make_shared<LabeledDataset>(GenerateClusters({300, 4, 3, 3.0, 1.0, 3}));
  const RetrofitRun clean = RunRetrofit(setup, d1);
  for (PairKind kind : {PairKind::kPermutation, PairKind::kMarginPerturbation}) {
    const auto pair = BuildPreservingPair(kind, setup, *d1, clean, 1);
    ASSERT_TRUE(pair.has_value()) << PairKindName(kind);
    EXPECT_FALSE(pair->changed == *d1);
    const InvarianceResult r =
        PrivacyInvarianceTest(setup, d1, std::make_shared<LabeledDataset>(pair->changed));
    EXPECT_TRUE(r.identical) << pair->description;
    EXPECT_FALSE(r.divergent_step.has_value());
  }
}

TEST(Privacy, FlippingControlDivergesWherePredicted) {
  const RetrofitSetup setup = Toy("de", 40, 5);
  const auto d1 = std::make_shared<LabeledDataset>(GenerateClusters({300, 4, 3, 3.0, 1.0, 5}));
  const RetrofitRun clean = RunRetrofit(setup, d1);
  const auto control = BuildFlippingPair(setup, *d1, clean);
  ASSERT_TRUE(control.has_value());
  const InvarianceResult r =
      PrivacyInvarianceTest(setup, d1, std::make_shared<LabeledDataset>(control->changed));
  EXPECT_FALSE(r.identical);
  EXPECT_EQ(r.divergent_step, control->predicted_step);
}

TEST(Extraction, CollisionsAndErrors) {
  std::vector<std::shared_ptr<const LabeledDataset>> sets;
  for (uint64_t i = 0; i < 6; ++i) {
    sets.push_back(std::make_shared<LabeledDataset>(GenerateClusters({60, 4, 3, 3.0, 1.0, i})));
  }
  const ExtractionReport small = ExtractionTest(Toy("onefifth", 2, 1), sets);
  EXPECT_LE(small.distinct_outputs, 4u);  // 2 bits of trace
  EXPECT_FALSE(small.vulnerable);
  EXPECT_TRUE(small.collision_guaranteed);
  EXPECT_NEAR(small.max_state_count_log2, 2.0, 1e-12);

  const ExtractionReport one = ExtractionTest(Toy("onefifth", 2, 1), {sets[0]});
  EXPECT_TRUE(one.degenerate);

  sets.push_back(sets[2]);
  EXPECT_THROW(ExtractionTest(Toy("onefifth", 2, 1), sets), PreconditionError);
}

}  // namespace
}  // namespace bboxer
