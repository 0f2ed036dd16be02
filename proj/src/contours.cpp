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

#include "qnq/contours.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qnq/error.hpp"

namespace qnq {

std::uint8_t aura_max(AuraKind kind) {
  switch (kind) {
    case AuraKind::Aura4: return 4;
    case AuraKind::Aura8: return 8;
    case AuraKind::Sum: return 16;
  }
  return 0;
}

namespace {

template <typename Code>
AuraMap aura_of(const std::vector<Code>& codes, std::size_t w, std::size_t h, AuraKind kind) {
  if (kind == AuraKind::Sum) fail(ErrorKind::Usage, "use aura_sum() for the Sum kind");
  static constexpr int kOffsets8[8][2] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0},
                                          {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  const int n = kind == AuraKind::Aura4 ? 4 : 8;
  AuraMap out{w, h, kind, std::vector<std::uint8_t>(w * h)};
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const Code code = codes[r * w + c];
      std::uint8_t count = 0;
      for (int k = 0; k < n; ++k) {
        const long rr = static_cast<long>(r) + kOffsets8[k][0];
        const long cc = static_cast<long>(c) + kOffsets8[k][1];
        const bool inside = rr >= 0 && cc >= 0 && rr < static_cast<long>(h) && cc < static_cast<long>(w);
        if (!inside || codes[static_cast<std::size_t>(rr) * w + static_cast<std::size_t>(cc)] != code)
          ++count;
      }
      out.values[r * w + c] = count;
    }
  }
  return out;
}

}  // namespace

AuraMap cross_aura(const ColorMap& map, AuraKind kind) {
  return aura_of(map.codes, map.width, map.height, kind);
}

AuraMap cross_aura(const LabelMap& labels, AuraKind kind) {
  return aura_of(labels.ids, labels.width, labels.height, kind);
}

AuraMap aura_sum(const AuraMap& aura4, const AuraMap& aura8) {
  if (aura4.kind != AuraKind::Aura4 || aura8.kind != AuraKind::Aura8)
    fail(ErrorKind::Usage, "aura_sum expects an Aura4 and an Aura8 map");
  if (aura4.width != aura8.width || aura4.height != aura8.height)
    fail(ErrorKind::Usage, "aura_sum dimension mismatch");
  AuraMap out{aura4.width, aura4.height, AuraKind::Sum, aura4.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += aura8.values[i];
  return out;
}

std::vector<std::uint64_t> perimeters(const LabelMap& labels) {
  std::vector<std::uint64_t> pl(labels.segment_count, 0);
  const AuraMap a4 = cross_aura(labels, AuraKind::Aura4);
  for (std::size_t i = 0; i < labels.ids.size(); ++i) {
    const SegmentId id = labels.ids[i];
    if (id >= pl.size()) fail(ErrorKind::Integrity, "segment id exceeds segment count");
    pl[id] += a4.values[i];
  }
  return pl;
}

std::uint64_t perimeter_pl(const LabelMap& labels, SegmentId id) {
  if (id >= labels.segment_count)
    fail(ErrorKind::Usage, "unknown segment id " + std::to_string(id));
  const std::size_t w = labels.width;
  const std::size_t h = labels.height;
  std::uint64_t pl = 0;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (labels.ids[r * w + c] != id) continue;
      pl += (r == 0 || labels.ids[(r - 1) * w + c] != id);
      pl += (r + 1 == h || labels.ids[(r + 1) * w + c] != id);
      pl += (c == 0 || labels.ids[r * w + c - 1] != id);
      pl += (c + 1 == w || labels.ids[r * w + c + 1] != id);
    }
  }
  return pl;
}

double roundness(std::uint64_t area, std::uint64_t pl) {
  if (area == 0) fail(ErrorKind::Range, "roundness needs a positive area");
  if (pl == 0) fail(ErrorKind::Range, "roundness needs a positive boundary length");
  // Both operands are exact integers below 2^53 for any realistic segment,
  // so the quotient is the correctly rounded value of 16A / PL^2.
  const double num = static_cast<double>(16 * area);
  const double den = static_cast<double>(pl) * static_cast<double>(pl);
  return std::sqrt(num / den);
}

std::vector<std::uint8_t> texture_mask(const AuraMap& aura4, std::size_t window) {
  if (aura4.kind != AuraKind::Aura4) fail(ErrorKind::Usage, "texture mask expects an Aura4 map");
  if (window < 3 || window % 2 == 0)
    fail(ErrorKind::Usage, "texture window must be odd and >= 3, got " + std::to_string(window));
  const std::size_t w = aura4.width;
  const std::size_t h = aura4.height;
  // Summed-area table of boundary indicators, (h + 1) x (w + 1).
  std::vector<std::uint32_t> sat((w + 1) * (h + 1), 0);
  for (std::size_t r = 0; r < h; ++r) {
    std::uint32_t row_sum = 0;
    for (std::size_t c = 0; c < w; ++c) {
      row_sum += aura4.values[r * w + c] > 0 ? 1 : 0;
      sat[(r + 1) * (w + 1) + c + 1] = sat[r * (w + 1) + c + 1] + row_sum;
    }
  }
  const std::size_t half = window / 2;
  const std::uint64_t threshold = 2 * window;
  std::vector<std::uint8_t> mask(w * h, 0);
  for (std::size_t r = 0; r < h; ++r) {
    const std::size_t r0 = r >= half ? r - half : 0;
    const std::size_t r1 = std::min(h, r + half + 1);
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t c0 = c >= half ? c - half : 0;
      const std::size_t c1 = std::min(w, c + half + 1);
      const std::uint64_t count = std::uint64_t{sat[r1 * (w + 1) + c1]} + sat[r0 * (w + 1) + c0] -
                                  sat[r0 * (w + 1) + c1] - sat[r1 * (w + 1) + c0];
      mask[r * w + c] = count > threshold ? 1 : 0;
    }
  }
  return mask;
}

}  // namespace qnq
