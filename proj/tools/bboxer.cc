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

// bboxer: command-line front end.
//
//   bboxer optimize   --algo onefifth --dim 10 --objective sphere --budget 1000 --out run1
//   bboxer retrofit   --model mlp2 --modifier broadcast --targets layer0,layer1 --algo dcma
//   bboxer bounds     --preset reference
//   bboxer robustness poison|privacy|extract ...
//   bboxer replay     --trace run1.trace.json
//
// Exit status: 0 success, 1 runtime or validation failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bboxer/bounds.h"
#include "bboxer/errors.h"
#include "bboxer/extraction.h"
#include "bboxer/flip_bounds.h"
#include "bboxer/objectives.h"
#include "bboxer/poisoning.h"
#include "bboxer/privacy.h"
#include "bboxer/registry.h"
#include "bboxer/retrofit.h"
#include "bboxer/retrofit_oracles.h"
#include "bboxer/run.h"
#include "bboxer/trace_io.h"
#include "json.hpp"

namespace {

using namespace bboxer;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ThreadLimit() {
  const char* env = std::getenv("BBOXER_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

// "42" or "1..5" (inclusive).
std::vector<uint64_t> ParseSeeds(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoull(text)};
    const uint64_t a = std::stoull(text.substr(0, dots));
    const uint64_t b = std::stoull(text.substr(dots + 2));
    if (b < a) throw UsageError("empty seed range '" + text + "'");
    std::vector<uint64_t> seeds;
    for (uint64_t s = a; s <= b; ++s) seeds.push_back(s);
    return seeds;
  } catch (const std::logic_error&) {
    throw UsageError("bad seed spec '" + text + "' (expected N or A..B)");
  }
}

AlgorithmConfig ParseConfig(const std::string& text) {
  if (text.empty()) return AlgorithmConfig::object();
  try {
    AlgorithmConfig c = AlgorithmConfig::parse(text);
    if (!c.is_object()) throw UsageError("--config must be a JSON object");
    return c;
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("--config is not valid JSON: ") + e.what());
  }
}

void CheckAlgorithm(const std::string& algo) {
  if (!IsKnownAlgorithm(algo)) {
    throw UsageError("unknown algorithm '" + algo + "'; valid ids: " + AlgorithmIdList());
  }
}

std::string SeedSuffix(const std::string& out, uint64_t seed, bool many) {
  return many ? out + "-seed" + std::to_string(seed) : out;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
}

// Sidecar that `replay` checks: the final point and its hash.
void WriteFinal(const std::string& prefix, const ParamVector& x) {
  json doc;
  doc["final_x"] = x;
  doc["hash"] = HashParamVector(x);
  WriteText(prefix + ".final.json", doc.dump(2) + "\n");
}

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Short form for grid parameters.
std::string Param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// optimize ------------------------------------------------------------------

struct OptimizeArgs {
  std::string algo;
  std::size_t dim = 10;
  std::string objective = "sphere";
  uint64_t budget = 1000;
  std::string seeds = "0";
  std::string config;
  std::string out = "run";
};

int Optimize(const OptimizeArgs& a) {
  CheckAlgorithm(a.algo);
  if (a.budget == 0) throw UsageError("--budget must be at least 1");
  if (a.dim == 0) throw UsageError("--dim must be at least 1");
  std::string objective_name = a.objective == "ellipsoid-1e4" ? "ellipsoid" : a.objective;
  ValueOracle::Objective objective;
  try {
    objective = MakeObjective(objective_name);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  const AlgorithmConfig config = ParseConfig(a.config);
  const std::vector<uint64_t> seeds = ParseSeeds(a.seeds);
  const bool many = seeds.size() > 1;
  std::vector<double> finals;
  for (uint64_t seed : seeds) {
    ValueOracle oracle(objective, ThreadLimit());
    std::string csv = "step,incumbent_value\n";
    const StepObserver observer = [&](uint64_t step, const Optimizer& opt) {
      csv += std::to_string(step) + "," + Num(objective(opt.Recommend())) + "\n";
    };
    const RunResult r = RunBboxer(a.algo, config, ParamVector(a.dim, 0.0), oracle, a.budget,
                                  seed, observer);
    const std::string prefix = SeedSuffix(a.out, seed, many);
    WriteTraceFile(prefix + ".trace.json", r.trace);
    WriteText(prefix + ".csv", csv);
    WriteFinal(prefix, r.final_x);
    const double value = objective(r.final_x);
    finals.push_back(value);
    std::cout << "seed=" << seed << " final_value=" << Num(value)
              << " bits=" << Num(TraceBits(r.trace)) << " trace=" << prefix << ".trace.json\n";
  }
  if (many) std::cout << "median_final_value=" << Num(Median(finals)) << "\n";
  return 0;
}

// retrofit ------------------------------------------------------------------

struct RetrofitArgs {
  std::string algo = "onefifth";
  std::string config;
  std::string model = "linear-softmax";
  std::size_t hidden = 8;
  std::string modifier = "full";
  std::vector<std::string> targets;
  double constant = 0.01;
  uint64_t budget = 100;
  bool budget_from_bounds = false;
  double eps = 0.05;
  double delta = 0.5;
  std::string seeds = "0";
  std::string data;
  std::string test_data;
  std::size_t samples = 2000;
  std::size_t features = 4;
  uint32_t classes = 3;
  double separation = 3.0;
  double spread = 1.0;
  uint64_t data_seed = 7;
  std::string out = "retrofit";
};

int Retrofit(RetrofitArgs a) {
  CheckAlgorithm(a.algo);
  ModifierSpec spec;
  try {
    spec.kind = ParseModifierKind(a.modifier);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  spec.constant = a.constant;
  if (a.targets.empty()) {
    a.targets = a.model == "mlp2" ? std::vector<std::string>{"layer0", "layer1"}
                                  : std::vector<std::string>{"layer0"};
  }
  spec.targets = a.targets;

  std::shared_ptr<const LabeledDataset> train;
  std::shared_ptr<const LabeledDataset> test;
  if (!a.data.empty()) {
    train = std::make_shared<LabeledDataset>(ReadDatasetCsv(a.data));
    if (!a.test_data.empty()) test = std::make_shared<LabeledDataset>(ReadDatasetCsv(a.test_data));
  } else {
    ClusterConfig cc{a.samples, a.features, a.classes, a.separation, a.spread, a.data_seed};
    train = std::make_shared<LabeledDataset>(GenerateClusters(cc));
    cc.seed = DeriveSeed(a.data_seed, "test-split");
    test = std::make_shared<LabeledDataset>(GenerateClusters(cc));
  }

  if (a.budget_from_bounds) {
    const BudgetBound b = MaxBudgetHoeffding(train->size(), a.eps, a.delta);
    if (!b.feasible || b.budget == 0) {
      throw Error("no budget satisfies the Hoeffding bound for s=" +
                  std::to_string(train->size()));
    }
    a.budget = b.budget;
  }
  if (a.budget == 0) throw UsageError("--budget must be at least 1");

  const ToyModelDims dims{train->dim, std::max<std::size_t>(train->classes, 2), a.hidden};
  const std::vector<uint64_t> seeds = ParseSeeds(a.seeds);
  const bool many = seeds.size() > 1;
  std::vector<double> gaps;
  for (uint64_t seed : seeds) {
    RetrofitSetup setup;
    setup.algorithm = a.algo;
    setup.config = ParseConfig(a.config);
    setup.m0 = std::make_shared<TensorModel>(MakeToyModel(a.model, dims, seed));
    setup.spec = spec;
    setup.budget = a.budget;
    setup.seed = seed;
    const RetrofitRun run = RunRetrofit(setup, train, ThreadLimit());

    const std::string prefix = SeedSuffix(a.out, seed, many);
    WriteTraceFile(prefix + ".trace.json", run.result.trace);
    WriteFinal(prefix, run.result.final_x);
    WriteText(prefix + ".model.json", ModelToJson(run.final_model).dump() + "\n");
    std::string csv = "step,best_train_loss\n";
    for (std::size_t i = 0; i < run.best_loss.size(); ++i) {
      csv += std::to_string(i + 1) + "," + Num(run.best_loss[i]) + "\n";
    }
    WriteText(prefix + ".csv", csv);

    bool monotone = true;
    for (std::size_t i = 1; i < run.best_loss.size(); ++i) {
      monotone = monotone && run.best_loss[i] <= run.best_loss[i - 1];
    }
    json summary;
    summary["algorithm"] = a.algo;
    summary["seed"] = seed;
    summary["budget"] = a.budget;
    summary["dimension"] = run.result.final_x.size();
    summary["initial_train_loss"] = EmpiricalLoss(*setup.m0, *train);
    summary["final_train_loss"] = EmpiricalLoss(run.final_model, *train);
    summary["best_train_loss_non_increasing"] = monotone;
    summary["trace_bits"] = TraceBits(run.result.trace);
    if (test) {
      summary["initial_test_loss"] = EmpiricalLoss(*setup.m0, *test);
      summary["final_test_loss"] = EmpiricalLoss(run.final_model, *test);
      const double gap = std::abs(summary["final_train_loss"].get<double>() -
                                  summary["final_test_loss"].get<double>());
      summary["generalization_gap"] = gap;
      gaps.push_back(gap);
    }
    WriteText(prefix + ".summary.json", summary.dump(2) + "\n");
    std::cout << summary.dump() << "\n";
  }
  if (many && !gaps.empty()) std::cout << "median_generalization_gap=" << Num(Median(gaps)) << "\n";
  return 0;
}

// bounds --------------------------------------------------------------------

struct BoundsArgs {
  std::string preset;
  std::vector<uint64_t> s = {8000};
  std::vector<double> eps = {0.05};
  std::vector<double> sigma;
  std::vector<double> delta = {0.5};
  std::string format = "csv";
};

void PrintTable(const std::vector<std::vector<std::string>>& rows, const std::string& format) {
  if (format == "csv") {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::cout << (i ? "  " : "") << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    std::cout << "\n";
  }
}

std::string BudgetCell(const BudgetBound& b) {
  return b.feasible ? std::to_string(b.budget) : std::string("infeasible");
}

int Bounds(const BoundsArgs& a) {
  if (a.format != "csv" && a.format != "text") throw UsageError("--format must be csv or text");
  std::vector<std::vector<std::string>> rows;
  if (!a.preset.empty()) {
    if (a.preset != "reference") throw UsageError("unknown preset '" + a.preset + "'");
    rows.push_back({"inequality", "s", "eps", "sigma", "delta", "max_budget"});
    struct Row {
      const char* name;
      double eps;
      double sigma;
    };
    for (const Row& r : {Row{"bennett", 0.01, 0.06}, Row{"hoeffding", 0.04, 0.0},
                         Row{"bennett", 0.04, 0.3}, Row{"bennett", 0.06, 0.3},
                         Row{"bennett", 0.1, 0.3}}) {
      const BudgetBound b = r.sigma > 0.0 ? MaxBudgetBennett(8000, r.eps, r.sigma, 0.5)
                                          : MaxBudgetHoeffding(8000, r.eps, 0.5);
      rows.push_back({r.name, "8000", Param(r.eps), r.sigma > 0.0 ? Param(r.sigma) : "-", "0.5",
                      BudgetCell(b)});
    }
    PrintTable(rows, a.format);
    return 0;
  }
  rows.push_back({"s", "eps", "sigma", "delta", "hoeffding_delta_one", "max_budget_hoeffding",
                  "bennett_delta_one", "max_budget_bennett"});
  std::vector<double> sigmas = a.sigma;
  if (sigmas.empty()) sigmas.push_back(0.0);
  for (uint64_t s : a.s) {
    for (double eps : a.eps) {
      for (double sigma : sigmas) {
        for (double delta : a.delta) {
          std::vector<std::string> row = {std::to_string(s), Param(eps),
                                          sigma > 0.0 ? Param(sigma) : "-", Param(delta),
                                          Num(HoeffdingDelta(s, eps)),
                                          BudgetCell(MaxBudgetHoeffding(s, eps, delta))};
          if (sigma > 0.0) {
            row.push_back(Num(BennettDelta(s, eps, sigma)));
            row.push_back(BudgetCell(MaxBudgetBennett(s, eps, sigma, delta)));
          } else {
            row.insert(row.end(), {"-", "-"});
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  PrintTable(rows, a.format);
  return 0;
}

// robustness ----------------------------------------------------------------

struct PoisonArgs {
  uint64_t n = 10000;
  uint64_t k = 1;
  uint64_t b = 20;
  uint64_t trials = 1000;
  double f0 = 0.5;
  std::string adversary = "worst";
  std::string algo = "onefifth";
  uint64_t seed = 1;
};

int Poison(const PoisonArgs& a) {
  CheckAlgorithm(a.algo);
  if (a.n == 0 || a.k > a.n) throw UsageError("need --n >= 1 and --k <= --n");
  PoisoningConfig c;
  c.algorithm = a.algo;
  c.budget = a.b;
  c.users = a.n;
  c.flips = a.k;
  c.f0 = a.f0;
  try {
    c.adversary = ParseAdversaryKind(a.adversary);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  c.trials = a.trials;
  c.seed = a.seed;
  c.threads = ThreadLimit();
  const PoisoningReport r = a.b == 0 ? PoisoningReport{} : SimulatePoisonedRetrofit(c);
  const RunBound stated = RunPoisoningBound(a.b, a.n, a.k);
  const RunBound corrected = CorrectedRunPoisoningBound(a.b, a.n, a.k);
  std::cout << "n,k,b,f0,adversary,trials,stated_bound,stated_vacuous,corrected_bound,"
               "interval_prob_per_round,exact_per_round,exact,empirical,se\n";
  std::cout << a.n << "," << a.k << "," << a.b << "," << Num(a.f0) << "," << a.adversary << ","
            << r.trials << "," << Num(stated.value) << "," << (stated.vacuous ? 1 : 0) << ","
            << Num(corrected.value) << "," << Num(ExactFlipProb(a.n, a.f0, a.k)) << ","
            << Num(TieRuleFlipProb(a.n, a.f0, a.k)) << "," << Num(r.predicted) << ","
            << Num(r.rate) << "," << Num(r.standard_error) << "\n";
  return 0;
}

struct DataArgs {
  std::string model = "linear-softmax";
  std::size_t samples = 300;
  std::size_t features = 4;
  uint32_t classes = 3;
  uint64_t budget = 40;
  uint64_t seed = 1;
};

RetrofitSetup ToySetup(const DataArgs& a, const std::string& algo, uint64_t seed) {
  RetrofitSetup setup;
  setup.algorithm = algo;
  setup.m0 = std::make_shared<TensorModel>(
      MakeToyModel(a.model, {a.features, a.classes, 8}, seed));
  setup.spec.kind = ModifierKind::kFull;
  setup.spec.targets = {"layer0"};
  setup.budget = a.budget;
  setup.seed = seed;
  return setup;
}

int Privacy(const DataArgs& a, const std::vector<std::string>& algos, uint64_t pairs) {
  for (const std::string& algo : algos) CheckAlgorithm(algo);
  if (a.budget == 0) throw UsageError("--budget must be at least 1");
  std::cout << "algorithm,pair,kind,identical,divergent_step,predicted_step\n";
  bool all_ok = true;
  const PairKind kinds[] = {PairKind::kPermutation, PairKind::kMarginPerturbation,
                            PairKind::kConsensusRelabel};
  for (const std::string& algo : algos) {
    for (uint64_t p = 0; p < pairs; ++p) {
      const uint64_t seed = DeriveSeed(a.seed, "privacy/" + std::to_string(p));
      const auto d1 = std::make_shared<LabeledDataset>(
          GenerateClusters({a.samples, a.features, a.classes, 3.0, 1.0, seed}));
      const RetrofitSetup setup = ToySetup(a, algo, seed);
      const RetrofitRun clean = RunRetrofit(setup, d1);
      const PairKind kind = kinds[p % 3];
      const std::optional<DatasetPair> pair = BuildPreservingPair(kind, setup, *d1, clean, seed);
      if (!pair) {
        std::cout << algo << "," << p << "," << PairKindName(kind) << ",skipped,,\n";
        continue;
      }
      const InvarianceResult r = PrivacyInvarianceTest(
          setup, d1, std::make_shared<LabeledDataset>(pair->changed));
      all_ok = all_ok && r.identical;
      std::cout << algo << "," << p << "," << PairKindName(kind) << ","
                << (r.identical ? "yes" : "no") << ","
                << (r.divergent_step ? std::to_string(*r.divergent_step) : "") << ",\n";
    }
    // Negative control on the first pair's data.
    const uint64_t seed = DeriveSeed(a.seed, "privacy/0");
    const auto d1 = std::make_shared<LabeledDataset>(
        GenerateClusters({a.samples, a.features, a.classes, 3.0, 1.0, seed}));
    const RetrofitSetup setup = ToySetup(a, algo, seed);
    const RetrofitRun clean = RunRetrofit(setup, d1);
    if (auto control = BuildFlippingPair(setup, *d1, clean)) {
      const InvarianceResult r = PrivacyInvarianceTest(
          setup, d1, std::make_shared<LabeledDataset>(control->changed));
      const bool ok = !r.identical && r.divergent_step == control->predicted_step;
      all_ok = all_ok && ok;
      std::cout << algo << ",control,flipping-relabel," << (r.identical ? "yes" : "no") << ","
                << (r.divergent_step ? std::to_string(*r.divergent_step) : "") << ","
                << control->predicted_step << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int Extract(const DataArgs& a, const std::string& algo, uint64_t count) {
  CheckAlgorithm(algo);
  if (a.budget == 0) throw UsageError("--budget must be at least 1");
  if (count == 0) throw UsageError("--datasets must be at least 1");
  std::vector<std::shared_ptr<const LabeledDataset>> datasets;
  for (uint64_t i = 0; i < count; ++i) {
    datasets.push_back(std::make_shared<LabeledDataset>(GenerateClusters(
        {a.samples, a.features, a.classes, 3.0, 1.0,
         DeriveSeed(a.seed, "extract/data/" + std::to_string(i))})));
  }
  const ExtractionReport r = ExtractionTest(ToySetup(a, algo, a.seed), datasets);
  std::cout << "algorithm,budget,datasets,distinct_outputs,collisions,vulnerable,"
               "max_state_bits,collision_guaranteed,degenerate\n";
  std::cout << algo << "," << a.budget << "," << r.datasets << "," << r.distinct_outputs << ","
            << r.collisions.size() << "," << (r.vulnerable ? "yes" : "no") << ","
            << Num(r.max_state_count_log2) << "," << (r.collision_guaranteed ? "yes" : "no")
            << "," << (r.degenerate ? "yes" : "no") << "\n";
  return 0;
}

// replay --------------------------------------------------------------------

int ReplayCommand(const std::string& trace_path, std::string final_path) {
  const Trace trace = ReadTraceFile(trace_path);
  if (final_path.empty()) {
    const std::string suffix = ".trace.json";
    std::string prefix = trace_path;
    if (prefix.size() > suffix.size() &&
        prefix.compare(prefix.size() - suffix.size(), suffix.size(), suffix) == 0) {
      prefix.resize(prefix.size() - suffix.size());
    }
    final_path = prefix + ".final.json";
  }
  std::ifstream f(final_path);
  if (!f) throw Error("cannot open '" + final_path + "'");
  json stored;
  try {
    stored = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed final-point file", e.byte);
  }
  const ParamVector x = Replay(trace);
  const std::string hash = HashParamVector(x);
  const std::string expected = stored.value("hash", "");
  if (hash != expected) {
    std::cout << "MISMATCH replayed=" << hash << " stored=" << expected << "\n";
    return 1;
  }
  std::cout << "VERIFIED " << hash << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparison-based black-box retrofitting with compression-trace accounting"};
  app.require_subcommand(1);

  OptimizeArgs opt;
  auto* optimize = app.add_subcommand("optimize", "run an optimizer on a synthetic objective");
  optimize->add_option("--algo", opt.algo, "algorithm id")->required();
  optimize->add_option("--dim", opt.dim, "search dimension");
  optimize->add_option("--objective", opt.objective, "sphere, rastrigin or ellipsoid-1e4");
  optimize->add_option("--budget", opt.budget, "number of steps");
  optimize->add_option("--seed,--seeds", opt.seeds, "seed or inclusive range A..B");
  optimize->add_option("--config", opt.config, "algorithm config as a JSON object");
  optimize->add_option("--out", opt.out, "output prefix");

  RetrofitArgs ret;
  auto* retrofit = app.add_subcommand("retrofit", "retrofit a toy model on labeled data");
  retrofit->add_option("--algo", ret.algo, "algorithm id");
  retrofit->add_option("--config", ret.config, "algorithm config as a JSON object");
  retrofit->add_option("--model", ret.model, "linear-softmax or mlp2");
  retrofit->add_option("--hidden", ret.hidden, "hidden width of mlp2");
  retrofit->add_option("--modifier", ret.modifier, "full, lowrank1 or broadcast");
  retrofit->add_option("--targets", ret.targets, "tensors to modify")->delimiter(',');
  retrofit->add_option("--constant", ret.constant, "multiplicative constant c");
  retrofit->add_option("--budget", ret.budget, "number of steps");
  retrofit->add_flag("--budget-from-bounds", ret.budget_from_bounds,
                     "largest budget allowed by the Hoeffding bound");
  retrofit->add_option("--eps", ret.eps, "epsilon for --budget-from-bounds");
  retrofit->add_option("--delta", ret.delta, "delta for --budget-from-bounds");
  retrofit->add_option("--seed,--seeds", ret.seeds, "seed or inclusive range A..B");
  retrofit->add_option("--data", ret.data, "training CSV (default: generated clusters)");
  retrofit->add_option("--test-data", ret.test_data, "test CSV");
  retrofit->add_option("--samples", ret.samples, "generated examples per split");
  retrofit->add_option("--features", ret.features, "generated feature count");
  retrofit->add_option("--classes", ret.classes, "generated class count");
  retrofit->add_option("--separation", ret.separation, "cluster separation");
  retrofit->add_option("--spread", ret.spread, "cluster spread");
  retrofit->add_option("--data-seed", ret.data_seed, "generator seed");
  retrofit->add_option("--out", ret.out, "output prefix");

  BoundsArgs bnd;
  auto* bounds = app.add_subcommand("bounds", "generalization bounds and safe budgets");
  bounds->add_option("--preset", bnd.preset, "reference");
  bounds->add_option("--s", bnd.s, "dataset sizes")->delimiter(',');
  bounds->add_option("--eps", bnd.eps, "deviations")->delimiter(',');
  bounds->add_option("--sigma", bnd.sigma, "loss standard deviations (Bennett)")->delimiter(',');
  bounds->add_option("--delta", bnd.delta, "risks")->delimiter(',');
  bounds->add_option("--format", bnd.format, "csv or text");

  auto* robustness = app.add_subcommand("robustness", "poisoning, privacy and extraction checks");
  robustness->require_subcommand(1);
  PoisonArgs poi;
  auto* poison = robustness->add_subcommand("poison", "simulate vote poisoning");
  poison->add_option("--n", poi.n, "voters per round");
  poison->add_option("--k", poi.k, "flipped votes per round");
  poison->add_option("--b", poi.b, "rounds (budget)");
  poison->add_option("--trials", poi.trials, "Monte-Carlo trials");
  poison->add_option("--f0", poi.f0, "probability a voter prefers the newer model");
  poison->add_option("--adversary", poi.adversary, "worst or random");
  poison->add_option("--algo", poi.algo, "algorithm id (two-way comparisons)");
  poison->add_option("--seed", poi.seed, "seed");

  DataArgs dat;
  std::vector<std::string> privacy_algos = {"onefifth", "de", "pso"};
  uint64_t pairs = 30;
  auto* privacy = robustness->add_subcommand("privacy", "comparison-preserving dataset pairs");
  privacy->add_option("--algos", privacy_algos, "algorithm ids")->delimiter(',');
  privacy->add_option("--pairs", pairs, "pairs per algorithm");
  privacy->add_option("--budget", dat.budget, "steps per run");
  privacy->add_option("--samples", dat.samples, "examples per dataset");
  privacy->add_option("--model", dat.model, "linear-softmax or mlp2");
  privacy->add_option("--seed", dat.seed, "seed");

  std::string extract_algo = "onefifth";
  uint64_t extract_count = 17;
  DataArgs ext;
  ext.budget = 4;
  auto* extract = robustness->add_subcommand("extract", "pigeonhole extraction test");
  extract->add_option("--algo", extract_algo, "algorithm id");
  extract->add_option("--budget", ext.budget, "steps per run");
  extract->add_option("--datasets", extract_count, "number of distinct datasets");
  extract->add_option("--samples", ext.samples, "examples per dataset");
  extract->add_option("--seed", ext.seed, "seed");

  std::string trace_path;
  std::string final_path;
  auto* replay = app.add_subcommand("replay", "rebuild a final point from its trace");
  replay->add_option("--trace", trace_path, "trace file")->required();
  replay->add_option("--final", final_path, "final-point file (default: <prefix>.final.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (optimize->parsed()) return Optimize(opt);
    if (retrofit->parsed()) return Retrofit(ret);
    if (bounds->parsed()) return Bounds(bnd);
    if (poison->parsed()) return Poison(poi);
    if (privacy->parsed()) return Privacy(dat, privacy_algos, pairs);
    if (extract->parsed()) return Extract(ext, extract_algo, extract_count);
    if (replay->parsed()) return ReplayCommand(trace_path, final_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
