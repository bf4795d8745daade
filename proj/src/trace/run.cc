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

#include "bboxer/run.h"

#include <memory>
#include <string>
#include <vector>

#include "bboxer/errors.h"
#include "bboxer/registry.h"
#include "bboxer/rng.h"

namespace bboxer {
namespace {

// Supplies the choice of each decision round within a step.
class DecisionSource {
 public:
  virtual ~DecisionSource() = default;
  virtual void BeginStep(uint64_t step, uint32_t k) = 0;
  virtual uint32_t Next(const ComparisonRequest& request) = 0;
};

class OracleSource : public DecisionSource {
 public:
  explicit OracleSource(ComparisonOracle& oracle) : oracle_(oracle) {}
  void BeginStep(uint64_t, uint32_t) override {}
  uint32_t Next(const ComparisonRequest& request) override {
    if (request.cases == 1) return 1;
    return oracle_.Compare(request);
  }

 private:
  ComparisonOracle& oracle_;
};

// Decodes a recorded mixed-radix choice into its rounds.
class RecordSource : public DecisionSource {
 public:
  explicit RecordSource(const std::vector<ChoiceRecord>& records) : records_(records) {}

  void BeginStep(uint64_t step, uint32_t k) override {
    const ChoiceRecord& r = records_[step - 1];
    ValidateRecord(r, step);
    if (r.choice > k) {
      throw TraceIntegrityError("record " + std::to_string(step) + ": choice " +
                                std::to_string(r.choice) + " exceeds k=" +
                                std::to_string(k) + " of the replayed algorithm");
    }
    if (r.k != k) {
      throw TraceIntegrityError("record " + std::to_string(step) + ": k=" +
                                std::to_string(r.k) + " but the replayed algorithm announces k=" +
                                std::to_string(k));
    }
    remaining_ = r.choice - 1;
    radix_ = k;
  }

  uint32_t Next(const ComparisonRequest& request) override {
    radix_ /= request.cases;
    const uint64_t digit = remaining_ / radix_;
    remaining_ %= radix_;
    return static_cast<uint32_t>(digit + 1);
  }

 private:
  const std::vector<ChoiceRecord>& records_;
  uint64_t remaining_ = 0;
  uint64_t radix_ = 1;
};

std::vector<ChoiceRecord> Drive(Optimizer& optimizer, uint64_t budget,
                                DecisionSource& source, const StepObserver& observer) {
  std::vector<ChoiceRecord> records;
  records.reserve(budget);
  for (uint64_t step = 1; step <= budget; ++step) {
    optimizer.Ask();
    const uint32_t k = optimizer.NumCases();
    if (k < 1) throw TraceIntegrityError("optimizer announced k=0");
    source.BeginStep(step, k);
    uint64_t combined = 0;
    uint64_t product = 1;
    do {
      const ComparisonRequest request = optimizer.Request();
      const uint32_t choice = source.Next(request);
      if (choice < 1 || choice > request.cases) {
        throw TraceIntegrityError("step " + std::to_string(step) + ": choice " +
                                  std::to_string(choice) + " outside [1, " +
                                  std::to_string(request.cases) + "]");
      }
      combined = combined * request.cases + (choice - 1);
      product *= request.cases;
      optimizer.Tell(choice);
    } while (!optimizer.StepComplete());
    if (product != k) {
      throw TraceIntegrityError("step " + std::to_string(step) +
                                ": decision rounds do not multiply to k=" +
                                std::to_string(k));
    }
    records.push_back({k, static_cast<uint32_t>(combined + 1)});
    if (observer) observer(step, optimizer);
  }
  return records;
}

}  // namespace

RunResult RunBboxer(std::string_view algorithm_id, const AlgorithmConfig& config,
                    const ParamVector& initial, ComparisonOracle& oracle,
                    uint64_t budget, uint64_t seed, const StepObserver& observer) {
  if (budget == 0) throw PreconditionError("budget must be at least 1");
  if (!AllFinite(initial)) throw NonFiniteError("initial point is not finite");
  std::unique_ptr<Optimizer> optimizer =
      MakeOptimizer(algorithm_id, config, initial, budget, seed);
  OracleSource source(oracle);
  RunResult result;
  result.trace.seed = seed;
  result.trace.algorithm_id = std::string(algorithm_id);
  result.trace.algorithm_config = config.is_null() ? AlgorithmConfig::object() : config;
  result.trace.algorithm_config["dim"] = initial.size();
  result.trace.budget = budget;
  result.trace.rng_id = std::string(kRngId);
  result.trace.records = Drive(*optimizer, budget, source, observer);
  if (auto key = optimizer->RecommendationKey(); key && *key < kDetachedKeyBase) {
    result.trace.recommendation_index = *key;
  }
  result.final_x = optimizer->Recommend();
  return result;
}

ParamVector Replay(const Trace& trace, const ParamVector& initial) {
  if (trace.budget == 0) throw PreconditionError("trace budget is zero");
  if (!trace.complete()) {
    throw TraceIntegrityError("truncated trace: " + std::to_string(trace.records.size()) +
                              " of " + std::to_string(trace.budget) + " records");
  }
  if (trace.rng_id != kRngId) {
    throw TraceIntegrityError("trace uses rng '" + trace.rng_id + "', expected '" +
                              std::string(kRngId) + "'");
  }
  std::unique_ptr<Optimizer> optimizer = MakeOptimizer(
      trace.algorithm_id, trace.algorithm_config, initial, trace.budget, trace.seed);
  RecordSource source(trace.records);
  Drive(*optimizer, trace.budget, source, {});
  return optimizer->Recommend();
}

ParamVector Replay(const Trace& trace) {
  auto it = trace.algorithm_config.find("dim");
  if (it == trace.algorithm_config.end() || !it->is_number_unsigned()) {
    throw TraceIntegrityError("trace config lacks the dimension ('dim')");
  }
  return Replay(trace, ParamVector(it->get<std::size_t>(), 0.0));
}

}  // namespace bboxer
