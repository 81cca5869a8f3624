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

// Online character data model: absolute-coordinate records, the 5-element
// offset representation (du, dv, down, up, end), and the preprocessing
// steps between them.

#ifndef SDT_TRAJECTORY_H_
#define SDT_TRAJECTORY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdt {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

using Polyline = std::vector<Point2>;

// State of the pen *after* a point: kDown continues the stroke to the next
// point, kUp lifts the pen, kEnd finishes the character.
enum class PenState : std::uint8_t { kDown = 0, kUp = 1, kEnd = 2 };

std::array<double, 3> OneHot(PenState state);
PenState StateFromOneHot(double m1, double m2, double m3);

struct TrajectoryPoint {
  double du = 0.0;
  double dv = 0.0;
  PenState state = PenState::kDown;
  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

// `points` may carry padding rows past `length`; only the first `length`
// entries are real pen points.
struct OnlineCharacter {
  std::vector<TrajectoryPoint> points;
  std::size_t length = 0;

  std::size_t padded_size() const { return points.size(); }
};

// Throws DataError when the character breaks the representation rules:
// L >= 1, finite offsets, at most one end state and only at position L.
void ValidateCharacter(const OnlineCharacter& character);

struct CharacterRecord {
  std::string writer_id;
  std::string label;
  std::vector<Polyline> strokes;

  std::size_t point_count() const;
  friend bool operator==(const CharacterRecord&, const CharacterRecord&) = default;
};

void ValidateRecord(const CharacterRecord& record);

// Ramer-Douglas-Peucker. Returns a subsequence of `stroke` keeping both
// endpoints; every dropped point is within `epsilon` of the kept chord that
// spans it.
Polyline RdpSimplify(const Polyline& stroke, double epsilon);
CharacterRecord RdpSimplify(const CharacterRecord& record, double epsilon);

// Distance from p to the segment [a, b] (to `a` when the segment is a point).
double PointSegmentDistance(const Point2& p, const Point2& a, const Point2& b);

struct NormalizedRecord {
  CharacterRecord record;
  bool degenerate = false;
};

// Uniform scale + translation so the longer bbox side spans [0, 1] and the
// box is centred in the unit square. A character whose points all coincide
// is moved to (0.5, 0.5) unscaled and flagged degenerate.
NormalizedRecord NormalizeCharacter(const CharacterRecord& record);

OnlineCharacter ToOffsets(const CharacterRecord& record);
CharacterRecord ToAbsolute(const OnlineCharacter& character,
                           const std::string& writer_id = {},
                           const std::string& label = {});

// Absolute positions of the real points, in order.
std::vector<Point2> AbsolutePoints(const OnlineCharacter& character);

OnlineCharacter PadToLength(const OnlineCharacter& character, std::size_t n_max);

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

inline constexpr int kRenderMargin = 2;

// White strokes (255) on black, 1 px wide, no anti-aliasing. Coordinates in
// [0, 1] map onto [margin, size - 1 - margin]; y grows downward.
GrayImage RenderOffline(const OnlineCharacter& character, int size);
GrayImage RenderRecord(const CharacterRecord& record, int size);

// Line-delimited JSON, one {"writer_id", "label", "strokes"} object per line.
std::vector<CharacterRecord> ReadDataset(const std::filesystem::path& path);
void WriteDataset(const std::vector<CharacterRecord>& records,
                  const std::filesystem::path& path);
std::string RecordToJsonLine(const CharacterRecord& record);
CharacterRecord RecordFromJsonLine(const std::string& line);

}  // namespace sdt

#endif  // SDT_TRAJECTORY_H_
