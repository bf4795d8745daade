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

#include "bboxer/oracle.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bboxer/combinatorics.h"
#include "bboxer/errors.h"

namespace bboxer {
namespace {

// Candidate indices sorted best first; on equal values the later (newer)
// candidate ranks first.
std::vector<uint32_t> RankCandidates(std::span<const double> values) {
  std::vector<uint32_t> order(values.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    if (values[a] != values[b]) return values[a] < values[b];
    return a > b;
  });
  return order;
}

void ExpectCandidates(const ComparisonRequest& request, std::size_t n) {
  if (request.candidates.size() != n) {
    throw PreconditionError(std::string(CompareKindName(request.kind)) +
                            " expects " + std::to_string(n) + " candidates, got " +
                            std::to_string(request.candidates.size()));
  }
}

}  // namespace

uint32_t DecideChoice(const ComparisonRequest& request,
                      std::span<const double> values) {
  if (values.size() != request.candidates.size()) {
    throw PreconditionError("DecideChoice: one value per candidate required");
  }
  uint32_t choice = 1;
  switch (request.kind) {
    case CompareKind::kNone:
      choice = 1;
      break;
    case CompareKind::kChildVsIncumbent:
      ExpectCandidates(request, 2);
      choice = values[0] <= values[1] ? outcome::kChildWins
                                      : outcome::kIncumbentKept;
      break;
    case CompareKind::kChildVsParentAndBest:
      ExpectCandidates(request, 3);
      if (values[0] <= values[2]) {
        choice = outcome::kNewBest;
      } else if (values[0] <= values[1]) {
        choice = outcome::kBetterThanParent;
      } else {
        choice = outcome::kWorseThanParent;
      }
      break;
    case CompareKind::kSelectSubset:
    case CompareKind::kSelectRankedSubset: {
      const uint32_t mu = request.mu;
      if (mu < 1 || mu > values.size()) {
        throw PreconditionError("subset selection needs 1 <= mu <= candidates");
      }
      const std::vector<uint32_t> order = RankCandidates(values);
      std::vector<uint32_t> selected(order.begin(), order.begin() + mu);
      std::vector<uint32_t> sorted = selected;
      std::sort(sorted.begin(), sorted.end());
      uint64_t rank = RankSubset(sorted);
      if (request.kind == CompareKind::kSelectRankedSubset) {
        // Position of each selected offspring inside the sorted subset, best first.
        std::vector<uint32_t> permutation(mu);
        for (uint32_t r = 0; r < mu; ++r) {
          permutation[r] = static_cast<uint32_t>(
              std::lower_bound(sorted.begin(), sorted.end(), selected[r]) -
              sorted.begin());
        }
        rank = rank * Factorial(mu) + RankPermutation(permutation);
      }
      choice = static_cast<uint32_t>(rank + 1);
      break;
    }
    case CompareKind::kSelectBest: {
      if (values.empty()) throw PreconditionError("select-best without candidates");
      choice = RankCandidates(values).front() + 1;
      break;
    }
  }
  if (choice > request.cases) {
    throw TraceIntegrityError("decided choice " + std::to_string(choice) +
                              " exceeds announced cases " +
                              std::to_string(request.cases));
  }
  return choice;
}

ValueOracle::ValueOracle(Objective objective, int max_threads)
    : objective_(std::move(objective)), max_threads_(std::max(1, max_threads)) {}

std::optional<double> ValueOracle::Lookup(CandidateKey key) const {
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second.value;
}

std::vector<Candidate> ValueOracle::EvaluatedCandidates() const {
  std::vector<Candidate> out;
  out.reserve(memo_.size());
  for (const auto& [key, entry] : memo_) out.push_back({key, entry.point});
  return out;
}

double ValueOracle::Value(const Candidate& candidate) {
  auto it = memo_.find(candidate.key);
  if (it != memo_.end()) {
    if (it->second.point != candidate.point) {
      throw TraceIntegrityError("candidate key " + std::to_string(candidate.key) +
                                " reused for a different point");
    }
    return it->second.value;
  }
  const double v = objective_(candidate.point);
  memo_.emplace(candidate.key, Entry{candidate.point, v});
  ++evaluations_;
  best_value_ = std::min(best_value_, v);
  return v;
}

uint32_t ValueOracle::Compare(const ComparisonRequest& request) {
  const std::size_t n = request.candidates.size();
  std::vector<double> values(n);
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < n; ++i) {
    const Candidate& c = request.candidates[i];
    auto it = memo_.find(c.key);
    if (it == memo_.end()) {
      missing.push_back(i);
    } else {
      values[i] = Value(c);
    }
  }
  if (missing.size() > 1 && max_threads_ > 1) {
    std::vector<double> computed(missing.size());
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(max_threads_), missing.size());
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t j = w; j < missing.size(); j += workers) {
          computed[j] = objective_(request.candidates[missing[j]].point);
        }
      });
    }
    for (std::thread& t : threads) t.join();
    for (std::size_t j = 0; j < missing.size(); ++j) {
      const Candidate& c = request.candidates[missing[j]];
      if (!memo_.count(c.key)) {
        memo_.emplace(c.key, Entry{c.point, computed[j]});
        ++evaluations_;
        best_value_ = std::min(best_value_, computed[j]);
      }
      values[missing[j]] = Value(c);
    }
  } else {
    for (std::size_t i : missing) values[i] = Value(request.candidates[i]);
  }
  return DecideChoice(request, values);
}

}  // namespace bboxer
