// Copyright 2026 The QNQ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QNQ_CONTOURS_HPP
#define QNQ_CONTOURS_HPP

// Raster contours. The cross-aura of a pixel is the number of its 4- or
// 8-neighbors carrying a different code; neighbors outside the image always
// count as different, so a lone pixel scores 4 (or 8) wherever it sits.
// Summing the 4-neighbor aura over a segment gives its total boundary
// length, outer boundary plus holes plus image frame.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qnq/color_map.hpp"
#include "qnq/segmentation.hpp"

namespace qnq {

enum class AuraKind : std::uint8_t { Aura4, Aura8, Sum };

struct AuraMap {
  std::size_t width = 0;
  std::size_t height = 0;
  AuraKind kind = AuraKind::Aura4;
  std::vector<std::uint8_t> values;

  std::uint8_t at(std::size_t row, std::size_t col) const { return values[row * width + col]; }
  friend bool operator==(const AuraMap&, const AuraMap&) = default;
};

/// Largest value an aura of `kind` may hold: 4, 8 or 16.
std::uint8_t aura_max(AuraKind kind);

AuraMap cross_aura(const ColorMap& map, AuraKind kind);
AuraMap cross_aura(const LabelMap& labels, AuraKind kind);

/// Pointwise Aura4 + Aura8. Throws Usage on mismatched sizes or kinds.
AuraMap aura_sum(const AuraMap& aura4, const AuraMap& aura8);

/// Total boundary length of one segment. Throws Usage for an unknown id.
std::uint64_t perimeter_pl(const LabelMap& labels, SegmentId id);

/// Boundary length of every segment, indexed by id, in one pass.
std::vector<std::uint64_t> perimeters(const LabelMap& labels);

/// 4 * sqrt(area) / pl, evaluated as sqrt(16 * area / pl^2) so that scaling
/// a segment by an integer factor returns a bit-identical value.
/// Throws Range when area == 0 or pl == 0.
double roundness(std::uint64_t area, std::uint64_t pl);

/// High-texture mask: a pixel is set when its W x W window (clipped at the
/// image border) holds more than 2W boundary pixels (Aura4 > 0).
/// W must be odd and at least 3.
std::vector<std::uint8_t> texture_mask(const AuraMap& aura4, std::size_t window);

}  // namespace qnq

#endif  // QNQ_CONTOURS_HPP
