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

#include "bboxer/retrofit.h"

#include <utility>

#include "bboxer/errors.h"
#include "bboxer/retrofit_oracles.h"

namespace bboxer {
namespace {

class RecordingOracle : public ComparisonOracle {
 public:
  RecordingOracle(ValueOracle& inner, const uint64_t& step,
                  std::vector<RecordedComparison>& log)
      : inner_(inner), step_(step), log_(log) {}

  uint32_t Compare(const ComparisonRequest& request) override {
    const uint32_t choice = inner_.Compare(request);
    log_.push_back({step_, request, choice});
    return choice;
  }

 private:
  ValueOracle& inner_;
  const uint64_t& step_;
  std::vector<RecordedComparison>& log_;
};

}  // namespace

RetrofitRun RunRetrofit(const RetrofitSetup& setup, std::shared_ptr<const LabeledDataset> data,
                        int max_threads) {
  if (!setup.m0) throw PreconditionError("retrofit setup has no model");
  const std::size_t d = ModifierDimension(*setup.m0, setup.spec);
  if (d == 0) throw ConfigError("modifier has dimension 0");
  ValueOracle values = MakeBestSoFarOracle(setup.m0, setup.spec, data, max_threads);
  RetrofitRun run;
  uint64_t step = 1;
  RecordingOracle oracle(values, step, run.comparisons);
  const StepObserver observer = [&](uint64_t done, const Optimizer&) {
    run.best_loss.push_back(values.best_value());
    step = done + 1;
  };
  run.result = RunBboxer(setup.algorithm, setup.config, ParamVector(d, 0.0), oracle,
                         setup.budget, setup.seed, observer);
  run.final_model = Modified(*setup.m0, run.result.final_x, setup.spec);
  run.evaluated = values.EvaluatedCandidates();
  return run;
}

}  // namespace bboxer
