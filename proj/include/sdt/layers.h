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

// Transformer building blocks shared by the encoders and the decoder.
// Pre-norm residual layout; no dropout (runs must be bit-reproducible).

#ifndef SDT_LAYERS_H_
#define SDT_LAYERS_H_

#include <torch/torch.h>

namespace sdt {

// [length, channels] table of the standard sine/cosine position code.
torch::Tensor SinusoidalEncoding(int64_t length, int64_t channels,
                                 const torch::TensorOptions& options);

// Boolean mask, true where attention is blocked. The first `prefix` tokens
// see each other freely; every later token sees the prefix and itself and
// everything before it.
torch::Tensor PrefixCausalMask(int64_t length, int64_t prefix, const torch::Device& device);

class MultiHeadAttentionImpl : public torch::nn::Module {
 public:
  MultiHeadAttentionImpl(int64_t channels, int64_t heads);

  // query [B, Tq, C], memory [B, Tk, C]; `blocked` is [Tq, Tk] or undefined.
  torch::Tensor forward(const torch::Tensor& query, const torch::Tensor& memory,
                        const torch::Tensor& blocked = {});

 private:
  int64_t channels_;
  int64_t heads_;
  torch::nn::Linear to_q_{nullptr}, to_k_{nullptr}, to_v_{nullptr}, to_out_{nullptr};
};
TORCH_MODULE(MultiHeadAttention);

class FeedForwardImpl : public torch::nn::Module {
 public:
  FeedForwardImpl(int64_t channels, int64_t hidden);
  torch::Tensor forward(const torch::Tensor& x);

 private:
  torch::nn::Linear in_{nullptr}, out_{nullptr};
};
TORCH_MODULE(FeedForward);

class EncoderLayerImpl : public torch::nn::Module {
 public:
  EncoderLayerImpl(int64_t channels, int64_t heads, int64_t hidden);
  torch::Tensor forward(const torch::Tensor& x);

 private:
  torch::nn::LayerNorm norm_attn_{nullptr}, norm_ff_{nullptr};
  MultiHeadAttention attn_{nullptr};
  FeedForward ff_{nullptr};
};
TORCH_MODULE(EncoderLayer);

// Masked self-attention, cross-attention into `memory`, feed-forward.
class DecoderLayerImpl : public torch::nn::Module {
 public:
  DecoderLayerImpl(int64_t channels, int64_t heads, int64_t hidden);
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& memory,
                        const torch::Tensor& blocked);

 private:
  torch::nn::LayerNorm norm_self_{nullptr}, norm_cross_{nullptr}, norm_ff_{nullptr};
  MultiHeadAttention self_attn_{nullptr}, cross_attn_{nullptr};
  FeedForward ff_{nullptr};
};
TORCH_MODULE(DecoderLayer);

// Stack of encoder layers followed by a closing LayerNorm.
class EncoderStackImpl : public torch::nn::Module {
 public:
  EncoderStackImpl(int64_t layers, int64_t channels, int64_t heads, int64_t hidden);
  torch::Tensor forward(torch::Tensor x);

 private:
  torch::nn::ModuleList layers_;
  torch::nn::LayerNorm norm_{nullptr};
};
TORCH_MODULE(EncoderStack);

}  // namespace sdt

#endif  // SDT_LAYERS_H_
