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

// Preprocessed datasets held as tensors, and the batch sampler.

#ifndef SDT_DATA_H_
#define SDT_DATA_H_

#include <torch/torch.h>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdt/contrastive.h"
#include "sdt/model.h"
#include "sdt/trajectory.h"

namespace sdt {

// RDP in source units, then unit-square normalisation. Returns nullopt for
// characters with more than `n_max` points after simplification.
std::optional<CharacterRecord> PreprocessRecord(const CharacterRecord& raw, double epsilon,
                                                std::size_t n_max);

torch::Tensor ImageTensor(const GrayImage& image);              // [1, S, S] in [0, 1]
torch::Tensor PointsTensor(const OnlineCharacter& padded);      // [n_max, 5]
OnlineCharacter CharacterFromTensor(const torch::Tensor& rows, std::size_t length);

// Normalised characters with cached renders and padded offset tensors.
class CharacterSet {
 public:
  CharacterSet(std::vector<CharacterRecord> records, const std::vector<std::string>& class_ids,
               int64_t n_max, int64_t image_size);

  std::size_t size() const { return records_.size(); }
  const CharacterRecord& record(std::size_t i) const { return records_[i]; }
  const OnlineCharacter& character(std::size_t i) const { return characters_[i]; }
  int64_t label(std::size_t i) const { return labels_[i]; }
  int64_t writer(std::size_t i) const { return writers_[i]; }
  const std::vector<std::string>& writer_ids() const { return writer_ids_; }
  const std::vector<std::size_t>& by_writer(int64_t w) const {
    return by_writer_[static_cast<std::size_t>(w)];
  }
  // Indices for (writer, class); empty when absent.
  const std::vector<std::size_t>& by_writer_class(int64_t w, int64_t label) const;
  int64_t writer_index(const std::string& writer_id) const;

  torch::Tensor images(const std::vector<std::size_t>& idx) const;  // [N, 1, S, S] float
  torch::Tensor points(const std::vector<std::size_t>& idx) const;  // [N, n_max, 5]
  torch::Tensor lengths(const std::vector<std::size_t>& idx) const;  // [N] int64

  int64_t n_max() const { return n_max_; }

 private:
  std::vector<CharacterRecord> records_;
  std::vector<OnlineCharacter> characters_;
  std::vector<int64_t> labels_;
  std::vector<int64_t> writers_;
  std::vector<std::string> writer_ids_;
  std::vector<std::vector<std::size_t>> by_writer_;
  std::map<std::pair<int64_t, int64_t>, std::vector<std::size_t>> by_writer_class_;
  torch::Tensor images_u8_;  // [N, 1, S, S]
  torch::Tensor points_;     // [N, n_max, 5] float32
  torch::Tensor lengths_;    // [N]
  int64_t n_max_;
};

// Printed-style content references: one render per class.
struct GlyphImages {
  std::vector<std::string> class_ids;
  torch::Tensor images;  // [n_classes, 1, S, S]

  int64_t class_index(const std::string& label) const;
};

GlyphImages LoadGlyphImages(const std::filesystem::path& glyph_file, int64_t image_size);

struct PreparedData {
  GlyphImages glyphs;
  CharacterSet train;
  CharacterSet test;
};

PreparedData LoadPreparedData(const std::filesystem::path& data_dir, int64_t n_max,
                              int64_t image_size);

// Every sampled writer contributes two targets (three when B is odd), so
// each writer appears at least twice among the targets; each target gets K
// references from its own writer, excluding the target itself when the
// writer has enough samples.
TrainingBatch SampleTrainingBatch(const CharacterSet& set, const GlyphImages& glyphs,
                                  int64_t batch_size, int64_t references, Rng& rng);

// K references of `writer` drawn without replacement (with replacement only
// if the writer has fewer than K samples), skipping `exclude`.
std::vector<std::size_t> DrawReferences(const CharacterSet& set, int64_t writer,
                                        int64_t references, Rng& rng,
                                        std::optional<std::size_t> exclude = std::nullopt);

}  // namespace sdt

#endif  // SDT_DATA_H_
