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

#include "qnq/colormap_codec.hpp"

#include <cstring>
#include <limits>
#include <string>

#include "qnq/error.hpp"

namespace qnq {

namespace {

constexpr char kPackedMagic[4] = {'Q', 'N', 'Q', '1'};
constexpr char kSegMagic[4] = {'S', 'E', 'G', '1'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return std::uint32_t{b[at]} | std::uint32_t{b[at + 1]} << 8 | std::uint32_t{b[at + 2]} << 16 |
         std::uint32_t{b[at + 3]} << 24;
}

std::uint32_t checked_dim(std::size_t v) {
  if (v > std::numeric_limits<std::uint32_t>::max())
    fail(ErrorKind::Capacity, "dimension does not fit in 32 bits");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

unsigned packed_bits(std::size_t levels) {
  if (levels == 50) return 6;
  if (levels == 12) return 4;
  fail(ErrorKind::Usage, "only 12- and 50-level maps can be packed, got " + std::to_string(levels));
}

std::vector<std::uint8_t> pack_colormap(const ColorMap& map) {
  const unsigned bits = packed_bits(map.levels);
  const std::size_t n = map.pixel_count();
  std::vector<std::uint8_t> out;
  out.reserve(kPackedHeaderBytes + (n * bits + 7) / 8);
  out.insert(out.end(), kPackedMagic, kPackedMagic + 4);
  put_u32(out, checked_dim(map.width));
  put_u32(out, checked_dim(map.height));
  out.push_back(static_cast<std::uint8_t>(bits));
  std::uint32_t acc = 0;
  unsigned filled = 0;
  for (std::uint8_t code : map.codes) {
    if (code >> bits) fail(ErrorKind::Integrity, "code " + std::to_string(code) + " does not fit");
    acc = (acc << bits) | code;
    filled += bits;
    while (filled >= 8) {
      filled -= 8;
      out.push_back(static_cast<std::uint8_t>(acc >> filled));
    }
    acc &= (1u << filled) - 1;
  }
  if (filled > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return out;
}

ColorMap unpack_colormap(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kPackedHeaderBytes) fail(ErrorKind::Format, "packed map truncated in header");
  if (std::memcmp(bytes.data(), kPackedMagic, 4) != 0) fail(ErrorKind::Format, "bad packed map magic");
  const std::size_t w = get_u32(bytes, 4);
  const std::size_t h = get_u32(bytes, 8);
  const unsigned bits = bytes[12];
  std::size_t levels = 0;
  if (bits == 6) levels = 50;
  else if (bits == 4) levels = 12;
  else fail(ErrorKind::Format, "unsupported code width " + std::to_string(bits));
  if (w == 0 || h == 0) fail(ErrorKind::Format, "packed map has a zero dimension");
  const std::size_t n = w * h;
  const std::size_t payload = (n * bits + 7) / 8;
  const std::size_t have = bytes.size() - kPackedHeaderBytes;
  if (have < payload) fail(ErrorKind::Format, "packed map truncated: payload " + std::to_string(have) +
                                                  " of " + std::to_string(payload) + " bytes");
  if (have > payload) fail(ErrorKind::Format, "trailing bytes after packed map");
  ColorMap map(w, h, levels);
  const std::uint8_t* p = bytes.data() + kPackedHeaderBytes;
  std::uint32_t acc = 0;
  unsigned filled = 0;
  const std::uint32_t mask = (1u << bits) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    while (filled < bits) {
      acc = (acc << 8) | *p++;
      filled += 8;
    }
    filled -= bits;
    const std::uint8_t code = static_cast<std::uint8_t>((acc >> filled) & mask);
    if (code >= levels) fail(ErrorKind::Format, "code " + std::to_string(code) + " out of range");
    map.codes[i] = code;
    acc &= (1u << filled) - 1;
  }
  if (acc != 0) fail(ErrorKind::Format, "nonzero padding bits");
  return map;
}

std::vector<std::uint8_t> encode_segmentation(const LabelMap& labels) {
  std::vector<std::uint8_t> out;
  out.reserve(kSegHeaderBytes + labels.ids.size() * 4);
  out.insert(out.end(), kSegMagic, kSegMagic + 4);
  put_u32(out, checked_dim(labels.width));
  put_u32(out, checked_dim(labels.height));
  for (SegmentId id : labels.ids) put_u32(out, id);
  return out;
}

LabelMap decode_segmentation(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kSegHeaderBytes) fail(ErrorKind::Format, "segmentation truncated in header");
  if (std::memcmp(bytes.data(), kSegMagic, 4) != 0) fail(ErrorKind::Format, "bad segmentation magic");
  LabelMap labels;
  labels.width = get_u32(bytes, 4);
  labels.height = get_u32(bytes, 8);
  const std::size_t n = labels.width * labels.height;
  if (bytes.size() != kSegHeaderBytes + 4 * n) fail(ErrorKind::Format, "segmentation payload size mismatch");
  labels.ids.resize(n);
  SegmentId top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    labels.ids[i] = get_u32(bytes, kSegHeaderBytes + 4 * i);
    top = std::max(top, labels.ids[i]);
  }
  labels.segment_count = n == 0 ? 0 : std::size_t{top} + 1;
  return labels;
}

RasterImage render_pseudocolor(const ColorMap& map, std::span<const Rgb> palette) {
  RasterImage out(map.width, map.height);
  for (std::size_t i = 0; i < map.codes.size(); ++i) {
    if (map.codes[i] >= palette.size())
      fail(ErrorKind::Integrity, "no palette entry for code " + std::to_string(map.codes[i]));
    out.set_pixel(i, palette[map.codes[i]]);
  }
  return out;
}

RasterImage render_labels(const LabelMap& labels) {
  RasterImage out(labels.width, labels.height);
  for (std::size_t i = 0; i < labels.ids.size(); ++i) {
    // 32-bit integer mix (lowbias32) so neighboring ids get unrelated colors.
    std::uint32_t x = labels.ids[i] + 1;
    x ^= x >> 16;
    x *= 0x7feb352dU;
    x ^= x >> 15;
    x *= 0x846ca68bU;
    x ^= x >> 16;
    out.set_pixel(i, {static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(x >> 8),
                      static_cast<std::uint8_t>(x >> 16)});
  }
  return out;
}

}  // namespace qnq
