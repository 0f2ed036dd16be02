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

#ifndef QNQ_COLORMAP_CODEC_HPP
#define QNQ_COLORMAP_CODEC_HPP

// Binary map formats.
//
// Packed color map ("QNQ1"):
//   offset 0  4 bytes  magic "QNQ1"
//   offset 4  u32 LE   width
//   offset 8  u32 LE   height
//   offset 12 u8       bits per code (6 for 50 levels, 4 for 12 levels)
//   offset 13          codes, row-major, MSB-first in one continuous
//                      bitstream, zero-padded to a whole byte at the end
//
// Raw segmentation ("SEG1"):
//   offset 0  4 bytes  magic "SEG1"
//   offset 4  u32 LE   width
//   offset 8  u32 LE   height
//   offset 12          u32 LE segment id per pixel, row-major

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qnq/color_map.hpp"
#include "qnq/raster.hpp"
#include "qnq/segmentation.hpp"

namespace qnq {

inline constexpr std::size_t kPackedHeaderBytes = 13;
inline constexpr std::size_t kSegHeaderBytes = 12;

/// 6 for 50 levels, 4 for 12 levels. Throws Usage for anything else.
unsigned packed_bits(std::size_t levels);

/// Throws Usage unless levels is 12 or 50, Integrity on a code that does
/// not fit, Capacity when a dimension exceeds 32 bits.
std::vector<std::uint8_t> pack_colormap(const ColorMap& map);

/// Throws Format on bad magic, an unsupported code width, a truncated or
/// oversized payload, nonzero padding, or a code >= levels.
ColorMap unpack_colormap(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_segmentation(const LabelMap& labels);
LabelMap decode_segmentation(std::span<const std::uint8_t> bytes);

/// Map rendered through `palette` (one color per code). Throws Integrity
/// when a code has no palette entry.
RasterImage render_pseudocolor(const ColorMap& map, std::span<const Rgb> palette);

/// Segment ids hashed to stable, well-separated colors.
RasterImage render_labels(const LabelMap& labels);

}  // namespace qnq

#endif  // QNQ_COLORMAP_CODEC_HPP
