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

#ifndef SDT_MODEL_H_
#define SDT_MODEL_H_

#include <torch/torch.h>

#include <vector>

#include "json.hpp"
#include "sdt/contrastive.h"
#include "sdt/decoder.h"
#include "sdt/encoders.h"

namespace sdt {

struct ModelConfig {
  EncoderConfig encoder;
  DecoderConfig decoder;
  ContrastiveConfig contrastive;
  int64_t n_classes = 40;
  int64_t references = 4;  // K

  void Validate() const;
};

nlohmann::json ToJson(const ModelConfig& config);
ModelConfig ModelConfigFromJson(const nlohmann::json& j);

// One teacher-forced training batch of B targets, each with K style
// references drawn from the target's writer.
struct TrainingBatch {
  torch::Tensor style_images;    // [B, K, 1, S, S]
  torch::Tensor content_images;  // [B, 1, S, S]
  torch::Tensor targets;         // [B, n_max, 5], padded with (0,0,0,0,1)
  torch::Tensor lengths;         // [B] int64, real points per target
  std::vector<int64_t> writers;  // [B] writer index of each target
  std::vector<int64_t> labels;   // [B] content class

  int64_t size() const { return content_images.size(0); }
};

struct LossTerms {
  torch::Tensor writer;  // L_wri
  torch::Tensor glyph;   // L_gly
  torch::Tensor pen;     // L_pre
  torch::Tensor state;   // L_cls
  torch::Tensor total;
};

// Multipliers on the two contrastive terms; {0, 0} gives the ablation that
// trains without either style objective.
struct StyleLossWeights {
  double writer = 1.0;
  double glyph = 1.0;
};

class SdtModelImpl : public torch::nn::Module {
 public:
  explicit SdtModelImpl(const ModelConfig& config);

  // images [B, K, 1, S, S] -> E, G each [B, K, d, c].
  StyleBundle EncodeStyle(const torch::Tensor& images);
  torch::Tensor EncodeContent(const torch::Tensor& images);

  // Teacher-forced logits [B, T, 6R+3].
  torch::Tensor Decode(const torch::Tensor& q, const StyleBundle& style,
                       const torch::Tensor& points);

  LossTerms Losses(const TrainingBatch& batch, Rng& rng, StyleLossWeights weights = {});

  const ModelConfig& config() const { return config_; }
  StyleEncoder style_encoder() { return style_encoder_; }
  ContentEncoder content_encoder() { return content_encoder_; }
  ContentClassifier content_classifier() { return content_classifier_; }
  HandwritingDecoder decoder() { return decoder_; }
  ProjectionHead writer_projection() { return writer_projection_; }
  ProjectionHead glyph_projection() { return glyph_projection_; }

 private:
  ModelConfig config_;
  StyleEncoder style_encoder_{nullptr};
  ContentEncoder content_encoder_{nullptr};
  ContentClassifier content_classifier_{nullptr};
  HandwritingDecoder decoder_{nullptr};
  ProjectionHead writer_projection_{nullptr};
  ProjectionHead glyph_projection_{nullptr};
};
TORCH_MODULE(SdtModel);

// L_pre averaged over real steps, L_cls over all padded steps.
struct SequenceLosses {
  torch::Tensor pen;
  torch::Tensor state;
};
SequenceLosses SequenceLoss(const torch::Tensor& logits, const torch::Tensor& targets,
                            const torch::Tensor& lengths, int64_t mixtures);

}  // namespace sdt

#endif  // SDT_MODEL_H_
