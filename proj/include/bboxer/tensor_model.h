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

#ifndef BBOXER_TENSOR_MODEL_H_
#define BBOXER_TENSOR_MODEL_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bboxer/dataset.h"
#include "json.hpp"

namespace bboxer {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool operator==(const Matrix&) const = default;
};

// A small classifier made of named matrices.
//   linear-softmax: logits = x layer0 + bias0
//   mlp2:           h = tanh((x layer0) * norm0), logits = h layer1
// norm0 and bias0 are 1 x n row vectors applied per column.
struct TensorModel {
  std::string kind;
  std::map<std::string, Matrix> tensors;

  const Matrix& tensor(const std::string& name) const;
  std::size_t input_dim() const;
  std::size_t classes() const;

  bool operator==(const TensorModel&) const = default;
};

struct ToyModelDims {
  std::size_t input = 4;
  std::size_t classes = 3;
  std::size_t hidden = 8;  // mlp2 only
};

// Deterministic for (kind, dims, seed). Linear weights and biases are
// positive (log-normal): multiplicative updates cannot change signs, so a
// positive start keeps every column reachable by scaling.
TensorModel MakeToyModel(const std::string& kind, const ToyModelDims& dims, uint64_t seed);

std::vector<double> Logits(const TensorModel& model, std::span<const double> features);
// Arg-max of the logits; ties go to the lowest class index.
uint32_t Predict(const TensorModel& model, std::span<const double> features);
std::vector<uint32_t> PredictAll(const TensorModel& model, const LabeledDataset& data);
// Mean 0/1 misclassification.
double EmpiricalLoss(const TensorModel& model, const LabeledDataset& data);

nlohmann::json ModelToJson(const TensorModel& model);
TensorModel ModelFromJson(const nlohmann::json& doc);

}  // namespace bboxer

#endif  // BBOXER_TENSOR_MODEL_H_
