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

#ifndef SDT_DECODER_H_
#define SDT_DECODER_H_

#include <torch/torch.h>

#include "json.hpp"
#include "sdt/layers.h"

namespace sdt {

struct DecoderConfig {
  int64_t channels = 128;
  int64_t heads = 4;
  int64_t layers_writer = 2;
  int64_t layers_glyph = 2;
  int64_t ff_mult = 2;
  int64_t mixtures = 20;  // R
  int64_t n_max = 64;
  double lambda = 2.0;

  int64_t output_size() const { return 6 * mixtures + 3; }
  void Validate() const;
};

nlohmann::json ToJson(const DecoderConfig& config);
DecoderConfig DecoderConfigFromJson(const nlohmann::json& j);

// Logit layout per step: [pi | mu_x | mu_y | sigma_x | sigma_y | rho] each
// R wide, then 3 pen-state logits.
struct GmmParams {
  torch::Tensor pi, log_pi;
  torch::Tensor mu_x, mu_y;
  torch::Tensor sigma_x, sigma_y;
  torch::Tensor rho;
  torch::Tensor pen, log_pen;
};

GmmParams GmmFromLogits(const torch::Tensor& logits, int64_t mixtures);

inline constexpr double kDensityFloor = 1e-12;
// tanh saturates to exactly +-1 in floating point; rho is scaled into the
// open interval so 1 - rho^2 stays positive.
inline constexpr double kRhoLimit = 1.0 - 1e-6;

// Negative log mixture density of (du, dv), floored at kDensityFloor.
// Elementwise over the leading axes.
torch::Tensor PenLoss(const GmmParams& params, const torch::Tensor& du, const torch::Tensor& dv);

// Scalar convenience form; throws std::domain_error on a non-finite density.
double PenLoss(const GmmParams& params, double du, double dv);

// -sum_i m_i log(p_i + 1e-12), elementwise over the leading axes.
torch::Tensor StateLoss(const torch::Tensor& pen_probs, const torch::Tensor& target_one_hot);

// Content-prefixed causal transformer decoder. The first two layer groups
// cross-attend the writer features E, the last group the glyph features G.
class HandwritingDecoderImpl : public torch::nn::Module {
 public:
  explicit HandwritingDecoderImpl(const DecoderConfig& config);

  // q [B, d, c]; writer/glyph memories [B, M, c] (K*d reference tokens);
  // points [B, T, 5] with T <= n_max. Returns logits [B, T, 6R+3] where
  // row t depends only on q, the memories and points[:, :t].
  torch::Tensor forward(const torch::Tensor& q, const torch::Tensor& writer_memory,
                        const torch::Tensor& glyph_memory, const torch::Tensor& points);

  const DecoderConfig& config() const { return config_; }

 private:
  DecoderConfig config_;
  torch::nn::Linear point_embed_{nullptr};
  torch::nn::ModuleList writer_layers_, glyph_layers_;
  torch::nn::LayerNorm norm_{nullptr};
  torch::nn::Linear out_{nullptr};
};
TORCH_MODULE(HandwritingDecoder);

}  // namespace sdt

#endif  // SDT_DECODER_H_
