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

#include "bboxer/dataset.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bboxer/errors.h"
#include "bboxer/rng.h"

namespace bboxer {

LabeledDataset GenerateClusters(const ClusterConfig& config) {
  if (config.size == 0 || config.dim == 0 || config.clusters < 2) {
    throw PreconditionError("cluster generator needs size >= 1, dim >= 1, clusters >= 2");
  }
  if (!(config.spread >= 0.0)) throw PreconditionError("spread must be non-negative");
  Rng rng = Rng::Derive(config.seed, "clusters");
  LabeledDataset data;
  data.dim = config.dim;
  data.classes = config.clusters;
  data.labels.resize(config.size);
  for (std::size_t i = 0; i < config.size; ++i) {
    data.labels[i] = static_cast<uint32_t>(i % config.clusters);
  }
  for (std::size_t i = config.size; i > 1; --i) {
    std::swap(data.labels[i - 1], data.labels[rng.UniformInt(i)]);
  }
  data.features.resize(config.size * config.dim);
  for (std::size_t i = 0; i < config.size; ++i) {
    const uint32_t c = data.labels[i];
    const std::size_t axis = c % config.dim;
    const double sign = (c / config.dim) % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < config.dim; ++j) {
      double v = config.spread * rng.Normal();
      if (j == axis) v += sign * config.separation;
      data.features[i * config.dim + j] = v;
    }
  }
  return data;
}

std::string DatasetToCsv(const LabeledDataset& data) {
  std::string out;
  for (std::size_t j = 0; j < data.dim; ++j) out += "f" + std::to_string(j) + ",";
  out += "label\n";
  char buf[32];
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (double v : data.Row(i)) {
      std::snprintf(buf, sizeof buf, "%.17g,", v);
      out += buf;
    }
    out += std::to_string(data.labels[i]) + "\n";
  }
  return out;
}

LabeledDataset DatasetFromCsv(const std::string& text) {
  std::size_t pos = 0;
  auto next_line = [&](std::string& line) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    pos = end + 1;
    return true;
  };

  std::string line;
  if (!next_line(line)) throw ParseError("empty dataset file", 0);
  LabeledDataset data;
  {
    std::stringstream header(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(header, cell, ',')) cells.push_back(cell);
    if (cells.size() < 2 || cells.back() != "label") {
      throw ParseError("dataset header must be f0,...,f{d-1},label", 0);
    }
    for (std::size_t j = 0; j + 1 < cells.size(); ++j) {
      if (cells[j] != "f" + std::to_string(j)) {
        throw ParseError("unexpected header column '" + cells[j] + "'", 0);
      }
    }
    data.dim = cells.size() - 1;
  }

  uint32_t max_label = 0;
  while (true) {
    const std::size_t line_start = pos;
    if (!next_line(line)) break;
    if (line.empty()) continue;
    std::size_t cell_start = 0;
    for (std::size_t j = 0; j <= data.dim; ++j) {
      std::size_t cell_end = line.find(',', cell_start);
      const bool last = j == data.dim;
      if (last != (cell_end == std::string::npos)) {
        throw ParseError("wrong number of columns", line_start + cell_start);
      }
      if (last) cell_end = line.size();
      const std::string cell = line.substr(cell_start, cell_end - cell_start);
      const char* begin = cell.c_str();
      char* stop = nullptr;
      if (!last) {
        const double v = std::strtod(begin, &stop);
        if (cell.empty() || *stop != '\0') {
          throw ParseError("bad number '" + cell + "'", line_start + cell_start);
        }
        data.features.push_back(v);
      } else {
        const unsigned long v = std::strtoul(begin, &stop, 10);
        if (cell.empty() || *stop != '\0' || cell[0] == '-' || v > UINT32_MAX) {
          throw ParseError("bad label '" + cell + "'", line_start + cell_start);
        }
        data.labels.push_back(static_cast<uint32_t>(v));
        max_label = std::max<uint32_t>(max_label, static_cast<uint32_t>(v));
      }
      cell_start = cell_end + 1;
    }
  }
  if (data.labels.empty()) throw ParseError("dataset has no examples", text.size());
  data.classes = std::max<uint32_t>(2, max_label + 1);
  return data;
}

void WriteDatasetCsv(const std::string& path, const LabeledDataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << DatasetToCsv(data);
}

LabeledDataset ReadDatasetCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return DatasetFromCsv(buf.str());
}

}  // namespace bboxer
