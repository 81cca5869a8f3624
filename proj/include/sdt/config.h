// Copyright 2026 The SDT Handwriting Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDT_CONFIG_H_
#define SDT_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "sdt/model.h"
#include "sdt/sampler.h"
#include "sdt/synthetic_corpus.h"

namespace sdt {

struct OptimizerConfig {
  double learning_rate = 2e-4;
  double clip_norm = 5.0;
  int64_t batch_size = 16;
  int64_t iterations = 3000;
  int64_t checkpoint_every = 1000;
};

struct PretrainConfig {
  double learning_rate = 1e-3;
  int64_t batch_size = 64;
  int64_t iterations = 300;
};

struct EvalConfig {
  int64_t classes_per_writer = 40;  // generated characters per test writer
  int64_t matrix_characters = 40;   // M for the DTW consistency matrix
  int64_t spectrum_samples = 100;   // real characters per writer for spectra
  int64_t recognizer_iterations = 800;
  int64_t identifier_iterations = 800;
  SampleMode mode = SampleMode::kGreedy;
};

struct RunConfig {
  std::filesystem::path out_dir = "run";
  std::uint64_t seed = 1;
  CorpusOptions corpus;
  double rdp_epsilon = 2.0;
  ModelConfig model;
  OptimizerConfig optimizer;
  PretrainConfig pretrain;
  StyleLossWeights style_weights;
  EvalConfig eval;

  std::filesystem::path data_dir() const { return out_dir / "data"; }
  std::filesystem::path content_checkpoint() const { return out_dir / "content.pt"; }
  std::filesystem::path model_checkpoint() const { return out_dir / "model.pt"; }
  void Validate() const;
};

nlohmann::json ToJson(const RunConfig& config);
RunConfig RunConfigFromJson(const nlohmann::json& j);
RunConfig LoadRunConfig(const std::filesystem::path& path);

}  // namespace sdt

#endif  // SDT_CONFIG_H_
