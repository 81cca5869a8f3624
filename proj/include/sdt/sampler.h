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

#ifndef SDT_SAMPLER_H_
#define SDT_SAMPLER_H_

#include <torch/torch.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sdt/contrastive.h"
#include "sdt/model.h"
#include "sdt/trajectory.h"

namespace sdt {

enum class SampleMode { kStochastic, kGreedy };

SampleMode SampleModeFromString(const std::string& name);
std::string ToString(SampleMode mode);

struct SamplerConfig {
  int64_t max_len = 64;
  SampleMode mode = SampleMode::kGreedy;
  std::uint64_t seed = 0;
};

// du = mu_x + sigma_x z1, dv = mu_y + sigma_y (rho z1 + sqrt(1 - rho^2) z2).
std::pair<double, double> SampleBivariate(double mu_x, double mu_y, double sigma_x,
                                          double sigma_y, double rho, Rng& rng);

// Autoregressive generation for B inputs at once. content_images
// [B, 1, S, S], style_images [B, K, 1, S, S]. Each sequence stops right after
// its first end-state point or at max_len; a sequence cut by the cap keeps
// its last point's state.
std::vector<OnlineCharacter> GenerateBatch(SdtModel& model, const torch::Tensor& content_images,
                                           const torch::Tensor& style_images,
                                           const SamplerConfig& config);

// content_image [1, S, S], style_images [K, 1, S, S].
OnlineCharacter Generate(SdtModel& model, const torch::Tensor& content_image,
                         const torch::Tensor& style_images, const SamplerConfig& config);

}  // namespace sdt

#endif  // SDT_SAMPLER_H_
