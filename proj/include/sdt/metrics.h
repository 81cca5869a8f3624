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

// Trajectory and feature metrics that need no model: length-normalised DTW,
// the writer-by-writer DTW matrix and the 2-D spectrum of feature tokens.

#ifndef SDT_METRICS_H_
#define SDT_METRICS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "sdt/trajectory.h"

namespace sdt {

// Classical DTW (match / insert / delete, Euclidean local cost), unnormalised.
double DtwCost(std::span<const Point2> a, std::span<const Point2> b);

// DTW between the absolute real points of both characters, divided by the
// number of real points of `real`.
double DtwDistance(const OnlineCharacter& generated, const OnlineCharacter& real);

struct DtwMatrix {
  std::size_t size = 0;       // T writers
  std::vector<double> cells;  // row-major T x T

  double at(std::size_t i, std::size_t j) const { return cells[i * size + j]; }
};

// gen_a[i][m] and gen_b[j][m] are the m-th characters of writers i and j;
// C[i][j] is the mean over m of DtwDistance(gen_a[i][m], gen_b[j][m]).
DtwMatrix ComputeDtwMatrix(const std::vector<std::vector<OnlineCharacter>>& gen_a,
                           const std::vector<std::vector<OnlineCharacter>>& gen_b);

struct SpectrumProfile {
  int h = 0;
  int w = 0;
  std::vector<double> magnitude;  // h x w, DC shifted to (h/2, w/2)
  double hf_ratio = 0.0;
  double total_energy = 0.0;
};

// `tokens` holds d x c features row-major (token-major) with d = h * w.
// Channels are averaged into one h x w map, transformed by a 2-D DFT and
// shifted. hf_ratio is the share of energy whose normalised frequency
// radius exceeds half the Nyquist radius.
SpectrumProfile ComputeSpectrum(std::span<const double> tokens, int d, int c, int h, int w);

// Averages energy over samples; magnitude is the mean of per-sample maps.
SpectrumProfile MeanSpectrum(std::span<const SpectrumProfile> profiles);

// Normalised radius of each shifted cell, in cycles/sample (Nyquist = 0.5).
std::vector<double> FrequencyRadius(int h, int w);

}  // namespace sdt

#endif  // SDT_METRICS_H_
