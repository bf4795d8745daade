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

#include "bboxer/tensor_model.h"

#include <cmath>

#include "bboxer/errors.h"
#include "bboxer/rng.h"

namespace bboxer {

const Matrix& TensorModel::tensor(const std::string& name) const {
  auto it = tensors.find(name);
  if (it == tensors.end()) {
    throw PreconditionError("model '" + kind + "' has no tensor '" + name + "'");
  }
  return it->second;
}

std::size_t TensorModel::input_dim() const { return tensor("layer0").rows; }

std::size_t TensorModel::classes() const {
  return kind == "mlp2" ? tensor("layer1").cols : tensor("layer0").cols;
}

TensorModel MakeToyModel(const std::string& kind, const ToyModelDims& dims, uint64_t seed) {
  if (dims.input == 0 || dims.classes == 0 || (kind == "mlp2" && dims.hidden == 0)) {
    throw PreconditionError("toy model dimensions must be positive");
  }
  Rng rng = Rng::Derive(seed, "toy-model/" + kind);
  TensorModel m;
  m.kind = kind;
  if (kind == "linear-softmax") {
    Matrix w(dims.input, dims.classes);
    for (double& v : w.data) v = std::exp(0.5 * rng.Normal());
    Matrix b(1, dims.classes);
    for (double& v : b.data) v = 0.1 * std::exp(0.5 * rng.Normal());
    m.tensors["layer0"] = std::move(w);
    m.tensors["bias0"] = std::move(b);
  } else if (kind == "mlp2") {
    Matrix w0(dims.input, dims.hidden);
    const double s0 = 1.0 / std::sqrt(static_cast<double>(dims.input));
    for (double& v : w0.data) v = s0 * rng.Normal();
    Matrix w1(dims.hidden, dims.classes);
    const double s1 = 1.0 / std::sqrt(static_cast<double>(dims.hidden));
    for (double& v : w1.data) v = s1 * rng.Normal();
    m.tensors["layer0"] = std::move(w0);
    m.tensors["norm0"] = Matrix(1, dims.hidden, 1.0);
    m.tensors["layer1"] = std::move(w1);
  } else {
    throw ConfigError("unknown model kind '" + kind + "' (expected linear-softmax or mlp2)");
  }
  return m;
}

namespace {

// row * m, for a row vector of length m.rows.
std::vector<double> RowTimes(std::span<const double> row, const Matrix& m) {
  std::vector<double> out(m.cols, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    const double x = row[r];
    const double* w = m.data.data() + r * m.cols;
    for (std::size_t c = 0; c < m.cols; ++c) out[c] += x * w[c];
  }
  return out;
}

}  // namespace

std::vector<double> Logits(const TensorModel& model, std::span<const double> features) {
  const Matrix& layer0 = model.tensor("layer0");
  if (features.size() != layer0.rows) {
    throw PreconditionError("feature dimension " + std::to_string(features.size()) +
                            " does not match model input " + std::to_string(layer0.rows));
  }
  std::vector<double> out = RowTimes(features, layer0);
  if (model.kind == "mlp2") {
    const Matrix& norm = model.tensor("norm0");
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = std::tanh(out[c] * norm.data[c]);
    return RowTimes(out, model.tensor("layer1"));
  }
  const Matrix& bias = model.tensor("bias0");
  for (std::size_t c = 0; c < out.size(); ++c) out[c] += bias.data[c];
  return out;
}

uint32_t Predict(const TensorModel& model, std::span<const double> features) {
  const std::vector<double> logits = Logits(model, features);
  uint32_t best = 0;
  for (uint32_t c = 1; c < logits.size(); ++c) {
    if (logits[c] > logits[best]) best = c;
  }
  return best;
}

std::vector<uint32_t> PredictAll(const TensorModel& model, const LabeledDataset& data) {
  std::vector<uint32_t> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = Predict(model, data.Row(i));
  return out;
}

double EmpiricalLoss(const TensorModel& model, const LabeledDataset& data) {
  if (data.size() == 0) throw PreconditionError("empirical loss of an empty dataset");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (Predict(model, data.Row(i)) != data.labels[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

nlohmann::json ModelToJson(const TensorModel& model) {
  nlohmann::json doc;
  doc["kind"] = model.kind;
  doc["tensors"] = nlohmann::json::object();
  for (const auto& [name, m] : model.tensors) {
    doc["tensors"][name] = {{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
  }
  return doc;
}

TensorModel ModelFromJson(const nlohmann::json& doc) {
  TensorModel model;
  try {
    model.kind = doc.at("kind").get<std::string>();
    for (const auto& [name, t] : doc.at("tensors").items()) {
      Matrix m;
      m.rows = t.at("rows").get<std::size_t>();
      m.cols = t.at("cols").get<std::size_t>();
      m.data = t.at("data").get<std::vector<double>>();
      if (m.data.size() != m.rows * m.cols) {
        throw ParseError("tensor '" + name + "' has " + std::to_string(m.data.size()) +
                             " values, expected rows*cols", 0);
      }
      model.tensors[name] = std::move(m);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad model snapshot: ") + e.what(), 0);
  }
  return model;
}

}  // namespace bboxer
