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

// The two style-disentangling objectives.
//
// WriterNCE is a supervised contrastive loss over pooled writer-head
// features: for anchor j, every other sample by the same writer is a
// positive and all other samples form the denominator.
//
// GlyphNCE contrasts two independently drawn patch subsets of one glyph-head
// feature sequence against one patch subset of every other sample.

#ifndef SDT_CONTRASTIVE_H_
#define SDT_CONTRASTIVE_H_

#include <torch/torch.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "json.hpp"

namespace sdt {

using Rng = std::mt19937_64;
using Projector = std::function<torch::Tensor(const torch::Tensor&)>;

struct ContrastiveConfig {
  double tau = 0.07;
  double alpha = 0.25;
  void Validate() const;
};

nlohmann::json ToJson(const ContrastiveConfig& config);
ContrastiveConfig ContrastiveConfigFromJson(const nlohmann::json& j);

// Two-layer MLP c -> c -> out_channels, output l2-normalised.
class ProjectionHeadImpl : public torch::nn::Module {
 public:
  ProjectionHeadImpl(int64_t channels, int64_t out_channels);
  torch::Tensor forward(const torch::Tensor& x);

 private:
  torch::nn::Linear hidden_{nullptr}, out_{nullptr};
};
TORCH_MODULE(ProjectionHead);

// Mean over the token axis: [..., d, c] -> [..., c].
torch::Tensor PoolWriterFeature(const torch::Tensor& tokens);

// features [N, c] (projected; re-normalised here), writer_ids [N].
// Throws std::invalid_argument if some anchor has no positive.
torch::Tensor WriterNce(const torch::Tensor& features, const std::vector<int64_t>& writer_ids,
                        double tau);

// n = max(1, round(d * alpha)) distinct indices drawn uniformly from [0, d).
std::vector<int64_t> SamplePatchIndices(int64_t d, double alpha, Rng& rng);

// Index sets for one GlyphNCE evaluation over B samples of d tokens.
struct GlyphPatchDraw {
  torch::Tensor view;       // [B, n]  o, drawn from anchor b
  torch::Tensor positive;   // [B, n]  o+, independent draw from anchor b
  torch::Tensor negatives;  // [B, B, n]  row b, column j: draw from sample j (j == b unused)
};

GlyphPatchDraw DrawGlyphPatches(int64_t batch, int64_t d, double alpha, Rng& rng);

// glyph [B, d, c]. Patch sets are mean-pooled, projected with `project`,
// unit-normalised; the per-anchor loss is averaged over the B anchors.
torch::Tensor GlyphNce(const torch::Tensor& glyph, const GlyphPatchDraw& draw,
                       const Projector& project, double tau);
torch::Tensor GlyphNce(const torch::Tensor& glyph, const Projector& project,
                       const ContrastiveConfig& config, Rng& rng);

}  // namespace sdt

#endif  // SDT_CONTRASTIVE_H_
