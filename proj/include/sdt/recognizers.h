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

// Judges for generated handwriting: a character-class recognizer (content
// score) and a set-level writer identifier (style score). Both read the
// point sequence directly, not a rendered image.

#ifndef SDT_RECOGNIZERS_H_
#define SDT_RECOGNIZERS_H_

#include <torch/torch.h>

#include <cstdint>
#include <vector>

#include "sdt/contrastive.h"
#include "sdt/trajectory.h"

namespace sdt {

// [N, n_max, 7] features: scaled offsets, one-hot state, centred absolute
// position; plus a [N, n_max] mask of real steps. Longer characters are
// truncated to n_max.
struct SequenceBatch {
  torch::Tensor features;
  torch::Tensor mask;
};
SequenceBatch MakeSequenceBatch(const std::vector<const OnlineCharacter*>& characters,
                                int64_t n_max);

class SequenceEncoderImpl : public torch::nn::Module {
 public:
  explicit SequenceEncoderImpl(int64_t width);
  // -> [N, 2 * width] (masked mean and max over time)
  torch::Tensor forward(const SequenceBatch& batch);
  int64_t output_size() const { return 2 * width_; }

 private:
  int64_t width_;
  torch::nn::Conv1d conv1_{nullptr}, conv2_{nullptr}, conv3_{nullptr};
};
TORCH_MODULE(SequenceEncoder);

class ContentRecognizerImpl : public torch::nn::Module {
 public:
  ContentRecognizerImpl(int64_t n_classes, int64_t width = 64);
  torch::Tensor forward(const SequenceBatch& batch);

 private:
  SequenceEncoder encoder_{nullptr};
  torch::nn::Linear head_{nullptr};
};
TORCH_MODULE(ContentRecognizer);

// Embeds each character, mean-pools a set of `set_size` characters and
// classifies the set's writer.
class WriterIdentifierImpl : public torch::nn::Module {
 public:
  WriterIdentifierImpl(int64_t n_writers, int64_t width = 64);
  // batch holds [S * set_size] characters, set-major.
  torch::Tensor forward(const SequenceBatch& batch, int64_t set_size);

 private:
  SequenceEncoder encoder_{nullptr};
  torch::nn::Linear embed_{nullptr}, head_{nullptr};
};
TORCH_MODULE(WriterIdentifier);

struct RecognizerOptions {
  int64_t iterations = 800;
  int64_t batch_size = 128;
  double learning_rate = 1e-3;
  int64_t n_max = 64;
  std::uint64_t seed = 7;
};

struct LabeledCharacters {
  std::vector<OnlineCharacter> characters;
  std::vector<int64_t> labels;
};

ContentRecognizer TrainContentRecognizer(const LabeledCharacters& train, int64_t n_classes,
                                         const RecognizerOptions& options);

std::vector<int64_t> PredictClasses(ContentRecognizer& model,
                                    const std::vector<OnlineCharacter>& characters,
                                    int64_t n_max);

// Top-1 accuracy of `model` on (characters, intended labels).
double ContentScore(ContentRecognizer& model, const LabeledCharacters& data, int64_t n_max);

// Training draws random same-writer sets of `set_size` from `data` (labels
// are writer indices).
WriterIdentifier TrainWriterIdentifier(const LabeledCharacters& data, int64_t n_writers,
                                       int64_t set_size, const RecognizerOptions& options);

// Each set is `set_size` characters attributed to one intended writer.
struct CharacterSets {
  std::vector<std::vector<OnlineCharacter>> sets;
  std::vector<int64_t> writers;
};

double StyleScore(WriterIdentifier& model, const CharacterSets& data, int64_t n_max);

}  // namespace sdt

#endif  // SDT_RECOGNIZERS_H_
