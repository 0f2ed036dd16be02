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

#ifndef QNQ_COLOR_MAP_HPP
#define QNQ_COLOR_MAP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qnq {

/// Per-pixel nominal code in [0, levels). Levels are 50 (fine names),
/// 12 (coarse names) or k for a k-means assignment map.
struct ColorMap {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t levels = 0;
  std::vector<std::uint8_t> codes;

  ColorMap() = default;
  ColorMap(std::size_t w, std::size_t h, std::size_t lv)
      : width(w), height(h), levels(lv), codes(w * h, 0) {}

  std::size_t pixel_count() const noexcept { return width * height; }
  std::uint8_t at(std::size_t row, std::size_t col) const { return codes[row * width + col]; }
  std::uint8_t& at(std::size_t row, std::size_t col) { return codes[row * width + col]; }

  friend bool operator==(const ColorMap&, const ColorMap&) = default;
};

}  // namespace qnq

#endif  // QNQ_COLOR_MAP_HPP
