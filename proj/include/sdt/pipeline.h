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

// The stages behind each command-line subcommand. Every stage reads and
// writes under RunConfig::out_dir and is deterministic given the config.

#ifndef SDT_PIPELINE_H_
#define SDT_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdt/config.h"
#include "sdt/evaluation.h"

namespace sdt {

// JSON-lines event log, optionally mirrored to stderr.
class RunLog {
 public:
  RunLog() = default;
  RunLog(const std::filesystem::path& file, bool append, bool echo);

  void Write(const std::string& event, nlohmann::json fields = nlohmann::json::object());

 private:
  std::ofstream file_;
  bool echo_ = false;
};

struct PrepareSummary {
  std::size_t train_records = 0;
  std::size_t test_records = 0;
  std::size_t dropped = 0;  // longer than n_max after simplification
};
PrepareSummary PrepareData(const RunConfig& config, RunLog& log);

// Returns final training-set accuracy of the content classifier.
double PretrainContent(const RunConfig& config, RunLog& log);

struct TrainResult {
  int64_t steps = 0;
  double writer = 0.0;
  double glyph = 0.0;
  double pen = 0.0;
  double state = 0.0;
  double total = 0.0;
};

// Requires the content checkpoint. With `resume`, continues from the model
// checkpoint's recorded step.
TrainResult Train(const RunConfig& config, RunLog& log, bool resume = false);

struct GenerateRequest {
  std::string label;
  std::string writer;
  int64_t count = 8;
  int cols = 8;
};
std::vector<OnlineCharacter> GenerateCommand(const RunConfig& config, const GenerateRequest& req,
                                             RunLog& log);

EvalReport EvaluateCommand(const RunConfig& config, RunLog& log);
ConsistencyResult DtwMatrixCommand(const RunConfig& config, RunLog& log);

struct WriterSpectrum {
  std::string writer_id;
  SpectrumProfile writer_head;
  SpectrumProfile glyph_head;
};
std::vector<WriterSpectrum> SpectrumCommand(const RunConfig& config, RunLog& log);

}  // namespace sdt

#endif  // SDT_PIPELINE_H_
