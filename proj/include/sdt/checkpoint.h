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

// Checkpoints are a torch weight archive plus a "<path>.json" sidecar that
// carries the schema version and the model configuration needed to rebuild
// the module before loading weights.

#ifndef SDT_CHECKPOINT_H_
#define SDT_CHECKPOINT_H_

#include <filesystem>

#include "json.hpp"
#include "sdt/model.h"

namespace sdt {

inline constexpr int kCheckpointSchemaVersion = 1;

std::filesystem::path SidecarPath(const std::filesystem::path& archive);

void SaveCheckpoint(const std::filesystem::path& path, SdtModel& model,
                    const nlohmann::json& extra = nlohmann::json::object());

struct LoadedCheckpoint {
  SdtModel model{nullptr};
  nlohmann::json sidecar;
};

LoadedCheckpoint LoadCheckpoint(const std::filesystem::path& path);

// Loads weights from `path` into an existing model of the same shape.
void LoadWeights(const std::filesystem::path& path, SdtModel& model);

}  // namespace sdt

#endif  // SDT_CHECKPOINT_H_
