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

#ifndef BBOXER_RNG_H_
#define BBOXER_RNG_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace bboxer {

// Identifier stored in every trace. The engine is std::mt19937_64, whose
// output sequence is fixed by the C++ standard; every distribution below is
// implemented here so that replay does not depend on the standard library's
// unspecified distribution algorithms.
inline constexpr std::string_view kRngId = "mt19937_64+splitmix64/v1";

uint64_t SplitMix64(uint64_t x);

// Seed of the sub-stream `label` under `root_seed`.
uint64_t DeriveSeed(uint64_t root_seed, std::string_view label);

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Independent stream for (root_seed, label).
  static Rng Derive(uint64_t root_seed, std::string_view label) {
    return Rng(DeriveSeed(root_seed, label));
  }

  uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();

  // Uniform on (0, 1].
  double UniformPositive() { return 1.0 - Uniform(); }

  // Standard normal draw (Marsaglia polar method).
  double Normal();

  // Uniform integer in [0, n), n > 0, without modulo bias.
  uint64_t UniformInt(uint64_t n);

  bool operator==(const Rng&) const = default;

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace bboxer

#endif  // BBOXER_RNG_H_
