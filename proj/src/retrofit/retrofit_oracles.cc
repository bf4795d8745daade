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

#include "bboxer/retrofit_oracles.h"

#include <string>
#include <utility>

#include "bboxer/errors.h"

namespace bboxer {

ValueOracle::Objective RetrofitLoss(std::shared_ptr<const TensorModel> m0, ModifierSpec spec,
                                    std::shared_ptr<const LabeledDataset> data) {
  const std::size_t d = ModifierDimension(*m0, spec);
  if (data->dim != m0->input_dim()) {
    throw PreconditionError("dataset has " + std::to_string(data->dim) +
                            " features but the model expects " +
                            std::to_string(m0->input_dim()));
  }
  return [m0 = std::move(m0), spec = std::move(spec), data = std::move(data),
          d](const ParamVector& x) {
    if (x.size() != d) {
      throw PreconditionError("candidate has dimension " + std::to_string(x.size()) +
                              ", modifier expects " + std::to_string(d));
    }
    return EmpiricalLoss(Modified(*m0, x, spec), *data);
  };
}

ValueOracle MakeBestSoFarOracle(std::shared_ptr<const TensorModel> m0, ModifierSpec spec,
                                std::shared_ptr<const LabeledDataset> data, int max_threads) {
  return ValueOracle(RetrofitLoss(std::move(m0), std::move(spec), std::move(data)),
                     max_threads);
}

bool FirstCandidateWins(const VoteRecord& votes) { return 2 * votes.ones >= votes.n; }

PreferenceOracle::PreferenceOracle(uint64_t users, PreferenceModel model, uint64_t seed,
                                   VoteAdversary adversary)
    : users_(users),
      model_(std::move(model)),
      adversary_(std::move(adversary)),
      rng_(Rng::Derive(seed, "preference/votes")),
      adversary_rng_(Rng::Derive(seed, "preference/adversary")) {
  if (users_ < 1) throw PreconditionError("preference oracle needs at least one user");
}

uint32_t PreferenceOracle::Compare(const ComparisonRequest& request) {
  if (request.kind == CompareKind::kNone) return 1;
  if (request.kind != CompareKind::kChildVsIncumbent) {
    throw ConfigError("preference oracle answers two-way comparisons only, got " +
                      std::string(CompareKindName(request.kind)));
  }
  const double f0 = model_(request.candidates[0], request.candidates[1]);
  if (!(f0 >= 0.0 && f0 <= 1.0)) throw PreconditionError("preference probability outside [0, 1]");
  if (!sampler_ || sampler_->p() != f0) sampler_ = BinomialSampler::Cached(users_, f0);
  VoteRecord votes{users_, sampler_->Sample(rng_)};
  last_honest_ = votes;
  if (adversary_) {
    votes = adversary_(votes, adversary_rng_);
    if (votes.n != users_ || votes.ones > votes.n) {
      throw PreconditionError("adversary returned an impossible vote record");
    }
  }
  last_votes_ = votes;
  ++rounds_;
  return FirstCandidateWins(votes) ? outcome::kChildWins : outcome::kIncumbentKept;
}

}  // namespace bboxer
