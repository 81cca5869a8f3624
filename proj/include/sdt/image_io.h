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

#ifndef SDT_IMAGE_IO_H_
#define SDT_IMAGE_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sdt/trajectory.h"

namespace sdt {

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB triples
};

void WritePng(const GrayImage& image, const std::filesystem::path& path);
void WritePng(const RgbImage& image, const std::filesystem::path& path);

// Lays tiles out row-major, `cols` per row, separated by a 1 px grey border.
// All tiles must share one size.
GrayImage TileGrid(std::span<const GrayImage> tiles, int cols);

// Heat map of a rows x cols matrix, each cell drawn as a `cell` px square.
RgbImage HeatMap(std::span<const double> values, int rows, int cols, int cell = 24);

}  // namespace sdt

#endif  // SDT_IMAGE_IO_H_
