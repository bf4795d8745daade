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
#include <map>
#include <memory>
#include <string>

#include "bboxer/dataset.h"
#include "bboxer/errors.h"
#include "bboxer/modifier.h"
#include "bboxer/objectives.h"
#include "bboxer/retrofit.h"
#include "bboxer/retrofit_oracles.h"
#include "bboxer/tensor_model.h"

namespace bboxer {
namespace {

TEST(TensorModel, ToyShapes) {
  const TensorModel lin = MakeToyModel("linear-softmax", {4, 3, 8}, 1);
  EXPECT_EQ(lin.tensor("layer0").rows, 4u);
  EXPECT_EQ(lin.tensor("layer0").cols, 3u);
  EXPECT_EQ(lin.tensor("bias0").rows, 1u);
  EXPECT_EQ(lin.input_dim(), 4u);
  EXPECT_EQ(lin.classes(), 3u);
  for (double w : lin.tensor("layer0").data) EXPECT_GT(w, 0.0);

  const TensorModel mlp = MakeToyModel("mlp2", {4, 3, 8}, 1);
  EXPECT_EQ(mlp.tensor("layer0").cols, 8u);
  EXPECT_EQ(mlp.tensor("norm0").data, std::vector<double>(8, 1.0));
  EXPECT_EQ(mlp.tensor("layer1").rows, 8u);
  EXPECT_EQ(mlp.classes(), 3u);

  EXPECT_EQ(MakeToyModel("mlp2", {4, 3, 8}, 1), mlp);
  EXPECT_NE(MakeToyModel("mlp2", {4, 3, 8}, 2), mlp);
  EXPECT_THROW(MakeToyModel("resnet", {4, 3, 8}, 1), ConfigError);
  EXPECT_THROW(lin.tensor("missing"), PreconditionError);
}

TEST(TensorModel, LinearLogitsAndTies) {
  TensorModel m;
  m.kind = "linear-softmax";
  m.tensors["layer0"] = Matrix(2, 2, 0.0);
  m.tensors["layer0"].at(0, 1) = 1.0;
  m.tensors["bias0"] = Matrix(1, 2, 0.0);
  const std::vector<double> x = {2.0, 5.0};
  EXPECT_EQ(Logits(m, x), (std::vector<double>{0.0, 2.0}));
  EXPECT_EQ(Predict(m, x), 1u);
  const std::vector<double> zero = {0.0, 0.0};
  EXPECT_EQ(Predict(m, zero), 0u);  // tie -> lowest index
  EXPECT_THROW(Logits(m, std::vector<double>{1.0}), PreconditionError);
}

TEST(TensorModel, JsonRoundTrip) {
  const TensorModel m = MakeToyModel("mlp2", {3, 2, 5}, 4);
  EXPECT_EQ(ModelFromJson(ModelToJson(m)), m);
  auto doc = ModelToJson(m);
  doc["tensors"]["layer0"]["data"].erase(0);
  EXPECT_THROW(ModelFromJson(doc), ParseError);
}

TEST(Modifier, Dimensions) {
  const TensorModel mlp = MakeToyModel("mlp2", {4, 3, 8}, 1);
  const std::vector<std::string> both = {"layer0", "layer1"};
  EXPECT_EQ(ModifierDimension(mlp, {ModifierKind::kFull, both, 0.01}), 4u * 8 + 8 * 3);
  EXPECT_EQ(ModifierDimension(mlp, {ModifierKind::kLowRank1, both, 0.01}), 4u + 8 + 8 + 3);
  EXPECT_EQ(ModifierDimension(mlp, {ModifierKind::kBroadcast, both, 0.01}), 8u + 3);
  EXPECT_THROW(ModifierDimension(mlp, {ModifierKind::kFull, {"layer9"}, 0.01}), ConfigError);
}

TEST(Modifier, ParseNames) {
  for (const char* name : {"full", "lowrank1", "broadcast"}) {
    EXPECT_EQ(ModifierKindName(ParseModifierKind(name)), name);
  }
  EXPECT_THROW(ParseModifierKind("lowrank2"), ConfigError);
}

TEST(Modifier, LowRankIsOuterProduct) {
  const TensorModel m0 = MakeToyModel("linear-softmax", {2, 3, 8}, 1);
  const ModifierSpec spec{ModifierKind::kLowRank1, {"layer0"}, 0.5};
  const ParamVector x = {1.0, -2.0, 0.5, 1.0, 3.0};
  const Matrix& w0 = m0.tensor("layer0");
  const TensorModel m = Modified(m0, x, spec);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_NEAR(m.tensor("layer0").at(r, c), w0.at(r, c) * std::exp(0.5 * x[r] * x[2 + c]),
                  1e-12);
    }
  }
  EXPECT_EQ(m.tensor("bias0"), m0.tensor("bias0"));
}

TEST(Modifier, SplitsAcrossTargetsInOrder) {
  const TensorModel m0 = MakeToyModel("mlp2", {2, 2, 3}, 1);
  const ModifierSpec spec{ModifierKind::kBroadcast, {"layer1", "layer0"}, 1.0};
  ParamVector x(2 + 3, 0.0);
  x[0] = 1.0;  // first column of layer1
  const TensorModel m = Modified(m0, x, spec);
  EXPECT_EQ(m.tensor("layer0"), m0.tensor("layer0"));
  EXPECT_NEAR(m.tensor("layer1").at(0, 0), m0.tensor("layer1").at(0, 0) * std::exp(1.0), 1e-12);
}

TEST(Modifier, SizeErrorsNameTheTensor) {
  const TensorModel m0 = MakeToyModel("mlp2", {2, 2, 3}, 1);
  const ModifierSpec spec{ModifierKind::kFull, {"layer0", "layer1"}, 0.01};
  try {
    Modified(m0, ParamVector(7, 0.0), spec);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("layer1"), std::string::npos);
  }
  EXPECT_THROW(Modified(m0, ParamVector(20, 0.0), spec), PreconditionError);
}

TEST(Dataset, ClustersAreBalancedAndSeparable) {
  const LabeledDataset d = GenerateClusters({300, 4, 3, 6.0, 0.1, 1});
  EXPECT_EQ(d.size(), 300u);
  EXPECT_EQ(d.classes, 3u);
  std::map<uint32_t, int> counts;
  for (uint32_t l : d.labels) ++counts[l];
  EXPECT_EQ(counts[0], 100);
  EXPECT_EQ(counts[2], 100);
  // Class c sits near +separation on axis c.
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_NEAR(d.Row(i)[d.labels[i]], 6.0, 1.0);
  }
  EXPECT_EQ(GenerateClusters({300, 4, 3, 6.0, 0.1, 1}), d);
  EXPECT_THROW(GenerateClusters({10, 4, 1, 1.0, 1.0, 1}), PreconditionError);
}

TEST(Dataset, CsvRoundTripIsExact) {
  const LabeledDataset d = GenerateClusters({50, 3, 2, 1.0, 1.0, 9});
  const std::string csv = DatasetToCsv(d);
  EXPECT_EQ(csv.substr(0, 15), "f0,f1,f2,label\n");
  EXPECT_EQ(DatasetFromCsv(csv), d);
}

TEST(Dataset, CsvErrorsCarryOffsets) {
  const std::string bad = "f0,f1,label\n1.0,2.0,0\n1.0,abc,1\n";
  try {
    DatasetFromCsv(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.byte_offset(), bad.find("abc"));
  }
  EXPECT_THROW(DatasetFromCsv("f0,label\n1.0\n"), ParseError);
  EXPECT_THROW(DatasetFromCsv("x,y\n"), ParseError);
  EXPECT_THROW(DatasetFromCsv(""), ParseError);
  EXPECT_THROW(DatasetFromCsv("f0,label\n1.0,-1\n"), ParseError);
}

TEST(RetrofitOracles, LossIsOrderInvariant) {
  const auto m0 = std::make_shared<TensorModel>(MakeToyModel("linear-softmax", {4, 3, 8}, 1));
  auto data = std::make_shared<LabeledDataset>(GenerateClusters({200, 4, 3, 3.0, 1.0, 2}));
  const ModifierSpec spec{ModifierKind::kFull, {"layer0"}, 0.01};
  const ParamVector x(12, 30.0);
  const double loss = RetrofitLoss(m0, spec, data)(x);
  LabeledDataset reversed = *data;
  for (std::size_t i = 0; i < reversed.size(); ++i) {
    const std::size_t j = reversed.size() - 1 - i;
    for (std::size_t f = 0; f < 4; ++f) reversed.features[i * 4 + f] = data->Row(j)[f];
    reversed.labels[i] = data->labels[j];
  }
  EXPECT_EQ(RetrofitLoss(m0, spec, std::make_shared<LabeledDataset>(reversed))(x), loss);
  EXPECT_EQ(loss * 200, std::round(loss * 200));
}

TEST(PreferenceOracle, MajorityWithTieRule) {
  EXPECT_TRUE(FirstCandidateWins({10, 5}));
  EXPECT_FALSE(FirstCandidateWins({10, 4}));
  EXPECT_TRUE(FirstCandidateWins({11, 6}));
  EXPECT_FALSE(FirstCandidateWins({11, 5}));

  ComparisonRequest r;
  r.kind = CompareKind::kChildVsIncumbent;
  r.cases = 2;
  r.candidates = {{1, {0.0}}, {0, {1.0}}};
  PreferenceOracle always(101, [](const Candidate&, const Candidate&) { return 1.0; }, 1);
  EXPECT_EQ(always.Compare(r), outcome::kChildWins);
  EXPECT_EQ(always.last_votes()->ones, 101u);
  PreferenceOracle never(101, [](const Candidate&, const Candidate&) { return 0.0; }, 1);
  EXPECT_EQ(never.Compare(r), outcome::kIncumbentKept);
  EXPECT_EQ(never.rounds(), 1u);

  r.kind = CompareKind::kChildVsParentAndBest;
  r.cases = 3;
  r.candidates.push_back({0, {1.0}});
  EXPECT_THROW(always.Compare(r), ConfigError);
}

TEST(PreferenceOracle, AdversaryRewritesVotes) {
  ComparisonRequest r;
  r.kind = CompareKind::kChildVsIncumbent;
  r.cases = 2;
  r.candidates = {{1, {0.0}}, {0, {1.0}}};
  VoteAdversary flip_all = [](const VoteRecord& v, Rng&) { return VoteRecord{v.n, v.n - v.ones}; };
  PreferenceOracle o(20, [](const Candidate&, const Candidate&) { return 1.0; }, 1, flip_all);
  EXPECT_EQ(o.Compare(r), outcome::kIncumbentKept);
  EXPECT_EQ(o.last_honest_votes()->ones, 20u);
  EXPECT_EQ(o.last_votes()->ones, 0u);
}

TEST(Objectives, MinimaAtOnes) {
  for (std::string_view name : ObjectiveNames()) {
    const auto f = MakeObjective(name);
    EXPECT_NEAR(f(ParamVector(6, 1.0)), 0.0, 1e-12) << name;
    EXPECT_GT(f(ParamVector(6, 0.0)), 0.0) << name;
  }
  EXPECT_NEAR(MakeObjective("ellipsoid")({1.0, 0.0}), 1e4, 1e-9);
  EXPECT_THROW(MakeObjective("rosenbrock"), ConfigError);
}

TEST(Retrofit, BestLossIsMonotoneAndReplayable) {
  RetrofitSetup setup;
  setup.algorithm = "dcma";
  setup.m0 = std::make_shared<TensorModel>(MakeToyModel("mlp2", {4, 3, 8}, 3));
  setup.spec = {ModifierKind::kBroadcast, {"layer0", "layer1"}, 0.01};
  setup.budget = 150;
  setup.seed = 5;
  auto data = std::make_shared<LabeledDataset>(GenerateClusters({500, 4, 3, 3.0, 1.0, 1}));
  const RetrofitRun run = RunRetrofit(setup, data);
  ASSERT_EQ(run.best_loss.size(), 150u);
  for (std::size_t i = 1; i < run.best_loss.size(); ++i) {
    EXPECT_LE(run.best_loss[i], run.best_loss[i - 1]);
  }
  EXPECT_EQ(run.result.final_x.size(), 11u);
  EXPECT_EQ(Modified(*setup.m0, Replay(run.result.trace), setup.spec), run.final_model);
  EXPECT_FALSE(run.comparisons.empty());
}

TEST(Retrofit, LearnsOnSeparableClusters) {
  RetrofitSetup setup;
  setup.algorithm = "onefifth";
  setup.m0 = std::make_shared<TensorModel>(MakeToyModel("linear-softmax", {4, 3, 8}, 1));
  setup.spec = {ModifierKind::kFull, {"layer0", "bias0"}, 0.01};
  setup.budget = 500;
  auto data = std::make_shared<LabeledDataset>(GenerateClusters({600, 4, 3, 4.0, 0.5, 3}));
  const RetrofitRun run = RunRetrofit(setup, data);
  EXPECT_LT(EmpiricalLoss(run.final_model, *data), EmpiricalLoss(*setup.m0, *data));
}

TEST(Retrofit, ThreadCountDoesNotChangeTheTrace) {
  RetrofitSetup setup;
  setup.algorithm = "de";
  setup.m0 = std::make_shared<TensorModel>(MakeToyModel("linear-softmax", {4, 3, 8}, 1));
  setup.spec = {ModifierKind::kFull, {"layer0"}, 0.01};
  setup.budget = 60;
  auto data = std::make_shared<LabeledDataset>(GenerateClusters({300, 4, 3, 3.0, 1.0, 3}));
  EXPECT_EQ(RunRetrofit(setup, data, 1).result.trace, RunRetrofit(setup, data, 4).result.trace);
}

}  // namespace
}  // namespace bboxer
