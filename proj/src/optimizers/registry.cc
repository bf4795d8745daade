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

#include "bboxer/registry.h"

#include <algorithm>
#include <array>

#include "bboxer/bet_and_run.h"
#include "bboxer/differential_evolution.h"
#include "bboxer/errors.h"
#include "bboxer/mu_lambda_es.h"
#include "bboxer/one_plus_one.h"
#include "bboxer/particle_swarm.h"
#include "config_reader.h"

namespace bboxer {
namespace {

constexpr std::array<std::string_view, 13> kIds = {
    "onefifth", "discrete", "lengler", "colengler", "portfolio", "fastga", "dcma",
    "de",       "de-ctb",   "pso",     "triple",    "multidisc", "bard"};

uint32_t Count32(ConfigReader& reader, const std::string& key, uint32_t fallback) {
  const uint64_t v = reader.Count(key, fallback);
  if (v > UINT32_MAX) throw ConfigError("'" + key + "' is too large");
  return static_cast<uint32_t>(v);
}

std::unique_ptr<Optimizer> MakeBetAndRun(std::string_view id, ConfigReader& reader,
                                         const ParamVector& initial, uint64_t budget,
                                         uint64_t seed) {
  std::vector<std::string> subs;
  double alpha = 1.0;
  if (id == "triple") {
    subs = {"onefifth", "onefifth", "onefifth"};
    alpha = 0.5;
  } else if (id == "multidisc") {
    subs = {"discrete", "discrete", "discrete"};
  } else {
    subs = {"de", "dcma"};
  }
  alpha = reader.Real("alpha", alpha);
  const bool restart = reader.Flag("restart", false);
  reader.Finish();
  SubOptimizerFactory factory = [subs](std::size_t index, const ParamVector& x0,
                                       uint64_t sub_budget, uint64_t sub_seed) {
    return MakeOptimizer(subs.at(index), AlgorithmConfig::object(), x0, sub_budget,
                         sub_seed);
  };
  return std::make_unique<BetAndRun>(std::string(id), initial, subs.size(),
                                     std::move(factory), alpha, budget, seed, restart);
}

}  // namespace

std::span<const std::string_view> AlgorithmIds() { return kIds; }

bool IsKnownAlgorithm(std::string_view id) {
  return std::find(kIds.begin(), kIds.end(), id) != kIds.end();
}

std::string AlgorithmIdList() {
  std::string out;
  for (std::string_view id : kIds) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

std::unique_ptr<Optimizer> MakeOptimizer(std::string_view id, const AlgorithmConfig& config,
                                         const ParamVector& initial, uint64_t budget,
                                         uint64_t seed) {
  if (!IsKnownAlgorithm(id)) {
    throw ConfigError("unknown algorithm '" + std::string(id) + "' (expected one of " +
                      AlgorithmIdList() + ")");
  }
  if (initial.empty()) throw PreconditionError("initial point must have dimension >= 1");
  ConfigReader reader(config, std::string(id));
  const uint64_t dim = reader.Count("dim", initial.size());
  if (dim != initial.size()) {
    throw ConfigError(std::string(id) + ": config dim " + std::to_string(dim) +
                      " does not match the initial point (" +
                      std::to_string(initial.size()) + ")");
  }

  std::unique_ptr<Optimizer> opt;
  if (id == "onefifth") {
    const double sigma = reader.Real("sigma", 1.0);
    reader.Finish();
    opt = std::make_unique<OneFifthEs>(initial, seed, sigma);
  } else if (id == "discrete" || id == "lengler" || id == "colengler" ||
             id == "portfolio" || id == "fastga") {
    MutationSchedule schedule = MutationSchedule::kDiscrete;
    if (id == "lengler" || id == "colengler") schedule = MutationSchedule::kLengler;
    if (id == "portfolio") schedule = MutationSchedule::kPortfolio;
    if (id == "fastga") schedule = MutationSchedule::kFastGa;
    const double beta = id == "fastga" ? reader.Real("beta", 1.5) : 1.5;
    reader.Finish();
    opt = std::make_unique<DiscreteEa>(std::string(id), initial, seed, budget, schedule,
                                       id == "colengler", beta);
  } else if (id == "dcma") {
    EsParams p;
    p.lambda = Count32(reader, "lambda", 0);
    p.mu = Count32(reader, "mu", 0);
    const std::string weights = reader.Text("weights", "equal");
    if (weights != "equal" && weights != "ranked") {
      throw ConfigError("dcma: weights must be 'equal' or 'ranked'");
    }
    p.ranked_weights = weights == "ranked";
    p.sigma = reader.Real("sigma", 1.0);
    const std::string accounting = reader.Text("accounting", "subset");
    if (accounting != "subset" && accounting != "binary") {
      throw ConfigError("dcma: accounting must be 'subset' or 'binary'");
    }
    p.accounting = accounting == "binary" ? EsAccounting::kBinary : EsAccounting::kSubset;
    reader.Finish();
    opt = std::make_unique<DiagonalEs>(initial, seed, p);
  } else if (id == "de" || id == "de-ctb") {
    DeParams p;
    p.population = Count32(reader, "popsize", p.population);
    p.weight = reader.Real("F", p.weight);
    p.crossover = reader.Real("CR", p.crossover);
    p.init_scale = reader.Real("init_scale", p.init_scale);
    p.variant = id == "de" ? DeVariant::kRand1Bin : DeVariant::kCurrentToBest;
    reader.Finish();
    opt = std::make_unique<DifferentialEvolution>(initial, seed, p);
  } else if (id == "pso") {
    PsoParams p;
    p.swarm = Count32(reader, "swarm", p.swarm);
    p.inertia = reader.Real("w", p.inertia);
    p.cognitive = reader.Real("c1", p.cognitive);
    p.social = reader.Real("c2", p.social);
    p.init_scale = reader.Real("init_scale", p.init_scale);
    p.global_best_outcome = reader.Flag("gbest3", false);
    reader.Finish();
    opt = std::make_unique<ParticleSwarm>(initial, seed, p);
  } else {
    opt = MakeBetAndRun(id, reader, initial, budget, seed);
  }
  return opt;
}

}  // namespace bboxer
