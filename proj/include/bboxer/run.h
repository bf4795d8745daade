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

#ifndef BBOXER_RUN_H_
#define BBOXER_RUN_H_

#include <cstdint>
#include <functional>
#include <string_view>

#include "bboxer/optimizer.h"
#include "bboxer/oracle.h"
#include "bboxer/trace.h"

namespace bboxer {

struct RunResult {
  ParamVector final_x;
  Trace trace;
};

// Called after every completed step with the 1-based step index.
using StepObserver = std::function<void(uint64_t step, const Optimizer&)>;

// The retrofitting loop: a fresh optimizer seeded with `seed` asks `budget`
// candidates; for each one the oracle answers the announced comparison and
// the choice is recorded. Steps whose decision has a single outcome are not
// sent to the oracle.
//
// The trace stores `config` with the dimension added under "dim".
RunResult RunBboxer(std::string_view algorithm_id, const AlgorithmConfig& config,
                    const ParamVector& initial, ComparisonOracle& oracle,
                    uint64_t budget, uint64_t seed,
                    const StepObserver& observer = {});

// Rebuilds the final point from the trace alone: no oracle, no data.
// Throws TraceIntegrityError on a truncated trace or on a record that
// disagrees with the branching factor the replayed algorithm announces.
ParamVector Replay(const Trace& trace, const ParamVector& initial);

// Replay from the origin of the traced dimension.
ParamVector Replay(const Trace& trace);

}  // namespace bboxer

#endif  // BBOXER_RUN_H_
