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

#ifndef QNQ_SEGMENTATION_HPP
#define QNQ_SEGMENTATION_HPP

// Superpixels as connected components of equal color code.
//
// Two raster passes: the first hands out provisional labels and records
// equivalences in a union-find forest, the second resolves every pixel to
// its root and numbers roots densely in order of first appearance. The
// output is therefore already in canonical form.
//
// The streamed variant labels each row stripe on its own (optionally in
// parallel), then merges equivalences across each seam using only the last
// row of the stripe above.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qnq/color_map.hpp"
#include "qnq/raster.hpp"

namespace qnq {

using SegmentId = std::uint32_t;

struct LabelMap {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t segment_count = 0;
  std::vector<SegmentId> ids;

  std::size_t pixel_count() const noexcept { return width * height; }
  SegmentId at(std::size_t row, std::size_t col) const { return ids[row * width + col]; }

  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

enum class Connectivity : std::uint8_t { Four = 4, Eight = 8 };

/// Union-find with path halving and union by rank.
class EquivalenceStore {
 public:
  SegmentId make();
  SegmentId find(SegmentId x);
  void unite(SegmentId a, SegmentId b);
  std::size_t size() const noexcept { return parent_.size(); }

  /// Appends `other`'s forest with every label shifted by size().
  void append(const EquivalenceStore& other);

 private:
  std::vector<SegmentId> parent_;
  std::vector<std::uint8_t> rank_;
};

/// Throws Capacity if the provisional label space overflows 32 bits.
LabelMap label_components(const ColorMap& map, Connectivity connectivity = Connectivity::Eight);

LabelMap label_components_streamed(const ColorMap& map, const TileScheme& scheme,
                                   Connectivity connectivity = Connectivity::Eight,
                                   std::size_t threads = 1);

/// Renumbers ids by first occurrence in row-major order. Two maps describe
/// the same partition iff their canonical forms are equal.
LabelMap canonical_relabel(const LabelMap& labels);

}  // namespace qnq

#endif  // QNQ_SEGMENTATION_HPP
