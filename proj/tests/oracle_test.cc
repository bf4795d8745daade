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

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "bboxer/combinatorics.h"
#include "bboxer/errors.h"
#include "bboxer/oracle.h"

namespace bboxer {
namespace {

ComparisonRequest MakeRequest(CompareKind kind, uint32_t cases, std::size_t n, uint32_t mu = 0) {
  ComparisonRequest r;
  r.kind = kind;
  r.cases = cases;
  r.mu = mu;
  for (std::size_t i = 0; i < n; ++i) r.candidates.push_back({i + 1, ParamVector{double(i)}});
  return r;
}

TEST(Combinatorics, BinomialAndFactorial) {
  EXPECT_EQ(BinomialCoefficient(10, 5), 252u);
  EXPECT_EQ(BinomialCoefficient(5, 0), 1u);
  EXPECT_EQ(BinomialCoefficient(3, 5), 0u);
  EXPECT_EQ(BinomialCoefficient(62, 31), 465428353255261088ULL);
  EXPECT_THROW(BinomialCoefficient(100, 50), ConfigError);
  EXPECT_EQ(Factorial(0), 1u);
  EXPECT_EQ(Factorial(20), 2432902008176640000ULL);
  EXPECT_THROW(Factorial(21), ConfigError);
}

TEST(Combinatorics, SubsetRankIsABijection) {
  const uint32_t n = 9, k = 4;
  std::set<uint64_t> ranks;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<uint32_t> idx;
    for (uint32_t i = 0; i < n; ++i) {
      if (mask[i]) idx.push_back(i);
    }
    const uint64_t rank = RankSubset(idx);
    EXPECT_LT(rank, BinomialCoefficient(n, k));
    EXPECT_EQ(UnrankSubset(rank, k), idx);
    ranks.insert(rank);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  EXPECT_EQ(ranks.size(), BinomialCoefficient(n, k));
}

TEST(Combinatorics, PermutationRankIsABijection) {
  std::vector<uint32_t> p = {0, 1, 2, 3, 4};
  std::set<uint64_t> ranks;
  do {
    const uint64_t rank = RankPermutation(p);
    EXPECT_EQ(UnrankPermutation(rank, 5), p);
    ranks.insert(rank);
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(ranks.size(), 120u);
  EXPECT_EQ(*ranks.rbegin(), 119u);
}

TEST(DecideChoice, ChildVsIncumbentTieGoesToChild) {
  const auto r = MakeRequest(CompareKind::kChildVsIncumbent, 2, 2);
  EXPECT_EQ(DecideChoice(r, std::vector<double>{1.0, 2.0}), outcome::kChildWins);
  EXPECT_EQ(DecideChoice(r, std::vector<double>{2.0, 2.0}), outcome::kChildWins);
  EXPECT_EQ(DecideChoice(r, std::vector<double>{3.0, 2.0}), outcome::kIncumbentKept);
}

TEST(DecideChoice, ParentAndBest) {
  const auto r = MakeRequest(CompareKind::kChildVsParentAndBest, 3, 3);
  EXPECT_EQ(DecideChoice(r, std::vector<double>{5.0, 4.0, 1.0}), outcome::kWorseThanParent);
  EXPECT_EQ(DecideChoice(r, std::vector<double>{3.0, 4.0, 1.0}), outcome::kBetterThanParent);
  EXPECT_EQ(DecideChoice(r, std::vector<double>{1.0, 4.0, 1.0}), outcome::kNewBest);
}

TEST(DecideChoice, SubsetDecodesToTheBestMu) {
  const auto r = MakeRequest(CompareKind::kSelectSubset, 10, 5, 2);
  const std::vector<double> values = {3.0, 0.5, 9.0, 0.1, 4.0};
  const uint32_t c = DecideChoice(r, values);
  EXPECT_EQ(UnrankSubset(c - 1, 2), (std::vector<uint32_t>{1, 3}));
}

TEST(DecideChoice, SubsetTieFavorsNewerCandidate) {
  const auto r = MakeRequest(CompareKind::kSelectSubset, 3, 3, 1);
  EXPECT_EQ(DecideChoice(r, std::vector<double>{1.0, 1.0, 1.0}), 3u);
}

TEST(DecideChoice, RankedSubsetKeepsOrder) {
  const auto r = MakeRequest(CompareKind::kSelectRankedSubset, 20, 4, 2);
  const uint32_t a = DecideChoice(r, std::vector<double>{0.1, 0.2, 5.0, 5.0});
  const uint32_t b = DecideChoice(r, std::vector<double>{0.2, 0.1, 5.0, 5.0});
  EXPECT_NE(a, b);
  EXPECT_EQ((a - 1) / 2, (b - 1) / 2);  // same subset, different order
}

TEST(DecideChoice, SelectBest) {
  const auto r = MakeRequest(CompareKind::kSelectBest, 3, 3);
  EXPECT_EQ(DecideChoice(r, std::vector<double>{2.0, 1.0, 3.0}), 2u);
}

TEST(DecideChoice, RejectsInconsistentRequests) {
  auto r = MakeRequest(CompareKind::kChildVsIncumbent, 2, 3);
  EXPECT_THROW(DecideChoice(r, std::vector<double>{1, 2, 3}), PreconditionError);
  r = MakeRequest(CompareKind::kSelectBest, 2, 3);
  EXPECT_THROW(DecideChoice(r, std::vector<double>{3, 2, 1}), TraceIntegrityError);
  r = MakeRequest(CompareKind::kSelectBest, 3, 3);
  EXPECT_THROW(DecideChoice(r, std::vector<double>{3, 2}), PreconditionError);
}

TEST(ValueOracle, EvaluatesEachKeyOnce) {
  int calls = 0;
  ValueOracle oracle([&](const ParamVector& x) {
    ++calls;
    return x[0];
  });
  const auto r = MakeRequest(CompareKind::kChildVsIncumbent, 2, 2);
  oracle.Compare(r);
  oracle.Compare(r);
  EXPECT_EQ(calls, 2);
  EXPECT_EQ(oracle.evaluations(), 2u);
  EXPECT_EQ(oracle.Lookup(1), 0.0);
  EXPECT_FALSE(oracle.Lookup(77).has_value());
  EXPECT_EQ(oracle.best_value(), 0.0);
  EXPECT_EQ(oracle.EvaluatedCandidates().size(), 2u);
}

TEST(ValueOracle, KeyReuseWithOtherPointIsAnError) {
  ValueOracle oracle([](const ParamVector& x) { return x[0]; });
  oracle.Value({3, ParamVector{1.0}});
  EXPECT_THROW(oracle.Value({3, ParamVector{2.0}}), TraceIntegrityError);
}

TEST(ValueOracle, ThreadCountDoesNotChangeAnswers) {
  auto f = [](const ParamVector& x) { return (x[0] - 2.0) * (x[0] - 2.0); };
  ValueOracle one(f, 1), four(f, 4);
  for (uint32_t mu = 1; mu <= 4; ++mu) {
    ComparisonRequest r = MakeRequest(CompareKind::kSelectSubset,
                                      static_cast<uint32_t>(BinomialCoefficient(8, mu)), 8, mu);
    for (auto& c : r.candidates) c.key += 10 * mu;
    EXPECT_EQ(one.Compare(r), four.Compare(r));
  }
}

}  // namespace
}  // namespace bboxer
