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

#ifndef BBOXER_COMBINATORICS_H_
#define BBOXER_COMBINATORICS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace bboxer {

// C(n, k); throws ConfigError when the result does not fit in 64 bits.
uint64_t BinomialCoefficient(uint64_t n, uint64_t k);

// m!; throws ConfigError on overflow.
uint64_t Factorial(uint64_t m);

// Colexicographic rank of a strictly increasing index set:
// sum_i C(indices[i], i + 1).
uint64_t RankSubset(std::span<const uint32_t> sorted_indices);
std::vector<uint32_t> UnrankSubset(uint64_t rank, uint32_t k);

// Lehmer-code rank of a permutation of {0, ..., m-1}.
uint64_t RankPermutation(std::span<const uint32_t> permutation);
std::vector<uint32_t> UnrankPermutation(uint64_t rank, uint32_t m);

}  // namespace bboxer

#endif  // BBOXER_COMBINATORICS_H_
