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

// Synthetic handwriting with two explicit style levels. Every sample of a
// writer shares one affine map (slant, aspect); each individual sample adds
// its own stroke bowing and point jitter.

#ifndef SDT_SYNTHETIC_CORPUS_H_
#define SDT_SYNTHETIC_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sdt/trajectory.h"

namespace sdt {

struct GlyphSkeleton {
  std::string class_id;
  std::vector<Polyline> strokes;  // unit-square coordinates
};

struct WriterProfile {
  double slant = 0.0;  // shear angle, radians
  double scale_x = 1.0;
  double scale_y = 1.0;
  double curvature_amp = 0.0;  // max per-stroke bow, unit-square fraction
  double jitter_std = 0.0;
  std::uint64_t seed = 0;
};

void ValidateProfile(const WriterProfile& profile);

// SplitMix64 finaliser; combines seeds into independent per-record streams.
std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b);

double HausdorffDistance(const GlyphSkeleton& a, const GlyphSkeleton& b);

// Pairwise Hausdorff separation between classes is kept above
// `min_separation` (colliding classes are redrawn).
std::vector<GlyphSkeleton> MakeGlyphBank(int n_classes, int points_per_stroke,
                                         std::uint64_t seed, double min_separation = 0.15);

// Output is in unit-square units (the identity profile reproduces `glyph`).
CharacterRecord RenderWriterSample(const WriterProfile& profile, const GlyphSkeleton& glyph,
                                   std::uint64_t sample_seed);

struct CorpusOptions {
  int n_writers = 20;
  int n_classes = 40;
  int samples_per_pair = 10;
  int points_per_stroke = 24;
  std::uint64_t seed = 1;
  double test_fraction = 0.2;
  // Raw records are scaled from the unit square into these source units, in
  // which the simplification tolerance is expressed.
  double canvas_units = 100.0;
};

struct Corpus {
  CorpusOptions options;
  std::vector<GlyphSkeleton> glyphs;
  std::vector<std::string> writer_ids;
  std::vector<WriterProfile> profiles;
  std::vector<std::string> train_writers;
  std::vector<std::string> test_writers;
  std::vector<CharacterRecord> train;  // raw, source units
  std::vector<CharacterRecord> test;
};

Corpus BuildCorpus(const CorpusOptions& options);

// raw_train.jsonl, raw_test.jsonl, glyphs.jsonl and manifest.json.
void WriteCorpus(const Corpus& corpus, const std::filesystem::path& dir);

CharacterRecord GlyphAsRecord(const GlyphSkeleton& glyph);

}  // namespace sdt

#endif  // SDT_SYNTHETIC_CORPUS_H_
