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

#include "bboxer/extraction.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "bboxer/errors.h"
#include "bboxer/registry.h"

namespace bboxer {

ExtractionReport ExtractionTest(
    const RetrofitSetup& setup,
    const std::vector<std::shared_ptr<const LabeledDataset>>& datasets) {
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    for (std::size_t j = i + 1; j < datasets.size(); ++j) {
      if (*datasets[i] == *datasets[j]) {
        throw PreconditionError("datasets " + std::to_string(i) + " and " +
                                std::to_string(j) + " are identical");
      }
    }
  }
  ExtractionReport report;
  report.datasets = datasets.size();
  report.degenerate = datasets.size() < 2;
  std::map<ParamVector, std::vector<std::size_t>> by_output;
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    const RetrofitRun run = RunRetrofit(setup, datasets[i]);
    const Trace& trace = run.result.trace;
    const std::unique_ptr<Optimizer> opt =
        MakeOptimizer(trace.algorithm_id, trace.algorithm_config,
                      ParamVector(run.result.final_x.size(), 0.0), trace.budget, trace.seed);
    report.max_state_count_log2 =
        std::max(report.max_state_count_log2, opt->StateCountLog2(trace.records));
    by_output[run.result.final_x].push_back(i);
  }
  report.distinct_outputs = by_output.size();
  for (const auto& [output, members] : by_output) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        report.collisions.emplace_back(members[a], members[b]);
      }
    }
  }
  std::sort(report.collisions.begin(), report.collisions.end());
  report.vulnerable = report.collisions.empty();
  report.collision_guaranteed =
      std::log2(static_cast<double>(std::max<std::size_t>(datasets.size(), 1))) >
      report.max_state_count_log2;
  return report;
}

}  // namespace bboxer
