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

// Image encoders. Both branches share one recipe: a strided convolutional
// backbone turns a 64x64 glyph image into an h x w x c map, the map is
// flattened into d = h*w tokens, position-coded, and refined by a
// transformer encoder. The style branch then splits into a writer head (E)
// and a glyph head (G); the content branch yields q.

#ifndef SDT_ENCODERS_H_
#define SDT_ENCODERS_H_

#include <torch/torch.h>

#include <vector>

#include "json.hpp"
#include "sdt/layers.h"

namespace sdt {

struct EncoderConfig {
  int64_t channels = 128;  // c
  int64_t heads = 4;
  int64_t enc_layers = 2;
  int64_t head_layers = 1;
  int64_t ff_mult = 2;
  int64_t image_size = 64;
  // Widths of the stride-2 convolution stages; the last stage is widened or
  // narrowed to `channels`. Five stages take 64 px down to a 2x2 map.
  std::vector<int64_t> stages = {16, 32, 64, 128, 128};

  int64_t map_side() const { return image_size >> static_cast<int64_t>(stages.size()); }
  int64_t tokens() const { return map_side() * map_side(); }  // d
  void Validate() const;
};

nlohmann::json ToJson(const EncoderConfig& config);
EncoderConfig EncoderConfigFromJson(const nlohmann::json& j);

class ConvBackboneImpl : public torch::nn::Module {
 public:
  explicit ConvBackboneImpl(const EncoderConfig& config);

  // [N, 1, S, S] -> feature map [N, h, w, c].
  torch::Tensor forward(const torch::Tensor& images);

 private:
  int64_t image_size_;
  torch::nn::Sequential body_{nullptr};
};
TORCH_MODULE(ConvBackbone);

// [N, h, w, c] -> [N, d, c], row-major over (h, w).
torch::Tensor FlattenFeatureMap(const torch::Tensor& map);

struct StyleBundle {
  torch::Tensor writer;  // E, [K, d, c] (or [B, K, d, c] when batched)
  torch::Tensor glyph;   // G, same shape as E
};

class StyleEncoderImpl : public torch::nn::Module {
 public:
  explicit StyleEncoderImpl(const EncoderConfig& config);

  // Each of the N images is encoded on its own: images [N, 1, S, S] ->
  // E, G each [N, d, c].
  StyleBundle forward(const torch::Tensor& images);

  ConvBackbone backbone() const { return backbone_; }

 private:
  ConvBackbone backbone_{nullptr};
  EncoderStack encoder_{nullptr};
  EncoderStack writer_head_{nullptr};
  EncoderStack glyph_head_{nullptr};
};
TORCH_MODULE(StyleEncoder);

class ContentEncoderImpl : public torch::nn::Module {
 public:
  explicit ContentEncoderImpl(const EncoderConfig& config);

  // images [N, 1, S, S] -> q [N, d, c].
  torch::Tensor forward(const torch::Tensor& images);

 private:
  ConvBackbone backbone_{nullptr};
  EncoderStack encoder_{nullptr};
};
TORCH_MODULE(ContentEncoder);

// Character-class logits from q (mean over tokens, then linear). Only the
// content pretraining stage uses it.
class ContentClassifierImpl : public torch::nn::Module {
 public:
  ContentClassifierImpl(int64_t channels, int64_t n_classes);
  torch::Tensor forward(const torch::Tensor& q);

 private:
  torch::nn::Linear fc_{nullptr};
};
TORCH_MODULE(ContentClassifier);

}  // namespace sdt

#endif  // SDT_ENCODERS_H_
