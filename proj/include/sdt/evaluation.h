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

// End-to-end evaluation of a trained model on unseen test writers.

#ifndef SDT_EVALUATION_H_
#define SDT_EVALUATION_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sdt/config.h"
#include "sdt/data.h"
#include "sdt/metrics.h"
#include "sdt/model.h"
#include "sdt/recognizers.h"
#include "sdt/sampler.h"

namespace sdt {

struct WriterReport {
  std::string writer_id;
  double mean_dtw = 0.0;
  double content_score = 0.0;
  double style_score = 0.0;
  double hf_ratio_writer = 0.0;
  double hf_ratio_glyph = 0.0;
};

struct EvalReport {
  double mean_dtw = 0.0;
  double content_score = 0.0;
  double style_score = 0.0;
  double hf_ratio_writer = 0.0;
  double hf_ratio_glyph = 0.0;
  double recognizer_accuracy = 0.0;  // content recognizer on real test characters
  double identifier_accuracy = 0.0;  // writer identifier on held-out real sets
  std::vector<WriterReport> writers;
};

nlohmann::json ToJson(const EvalReport& report);
// Throws std::invalid_argument if a required field is missing or a score
// falls outside [0, 1].
void ValidateReportJson(const nlohmann::json& j);

// Content recognizer and writer identifier, trained once on real data.
struct Judges {
  ContentRecognizer recognizer{nullptr};
  WriterIdentifier identifier{nullptr};
  int64_t set_size = 4;
  int64_t n_max = 64;
  double recognizer_accuracy = 0.0;
  double identifier_accuracy = 0.0;
};

Judges TrainJudges(const PreparedData& data, const RunConfig& config);

// Generated characters of one test writer, one per requested class, all
// conditioned on the same reference set.
std::vector<OnlineCharacter> GenerateForWriter(SdtModel& model, const PreparedData& data,
                                               const std::vector<std::size_t>& references,
                                               const std::vector<int64_t>& classes,
                                               const SamplerConfig& sampler);

// Per-sample spectra of E and G for up to `samples` real characters of
// `writer`, averaged: {writer head, glyph head}.
std::pair<SpectrumProfile, SpectrumProfile> StyleSpectra(SdtModel& model, const CharacterSet& set,
                                                         int64_t writer, int64_t samples);

EvalReport EvaluateModel(SdtModel& model, const PreparedData& data, Judges& judges,
                         const RunConfig& config);

// Two disjoint reference draws per test writer; M characters each.
struct ConsistencyResult {
  DtwMatrix matrix;
  std::vector<std::string> writer_ids;
};
ConsistencyResult ConsistencyMatrix(SdtModel& model, const PreparedData& data,
                                    const RunConfig& config);

}  // namespace sdt

#endif  // SDT_EVALUATION_H_
