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

#ifndef QNQ_SDT_HPP
#define QNQ_SDT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qnq/color_map.hpp"
#include "qnq/raster.hpp"
#include "qnq/segmentation.hpp"

namespace qnq {

/// Minimum enclosing rectangle, inclusive bounds.
struct Mer {
  std::size_t min_row = 0;
  std::size_t min_col = 0;
  std::size_t max_row = 0;
  std::size_t max_col = 0;
  friend bool operator==(const Mer&, const Mer&) = default;
};

/// One row of the segment description table.
struct SegmentRecord {
  SegmentId id = 0;
  Mer mer;
  std::uint8_t color_code = 0;
  std::uint64_t area = 0;
  std::array<std::uint64_t, kBands> band_sums{};  // exact integer sums
  std::array<double, kBands> mean{};

  friend bool operator==(const SegmentRecord&, const SegmentRecord&) = default;
};

struct SegmentTable {
  std::size_t levels = 0;  // color levels of the source map
  std::vector<SegmentRecord> records;  // indexed by id

  friend bool operator==(const SegmentTable&, const SegmentTable&) = default;
};

/// Partial table over a row stripe. Partials combine with merge() in any
/// order and finalize() to the same table.
class SdtAccumulator {
 public:
  SdtAccumulator(std::size_t segment_count, std::size_t levels);

  void accumulate(const LabelMap& labels, const ColorMap& colors, const RasterImage& image,
                  RowRange rows);
  void merge(const SdtAccumulator& other);
  SegmentTable finalize() const;

 private:
  std::size_t levels_;
  std::vector<SegmentRecord> records_;  // area == 0 marks "not seen yet"
};

/// Throws Usage on mismatched dimensions and Integrity when one id covers
/// two color codes or an id exceeds the segment count.
SegmentTable build_sdt(const LabelMap& labels, const ColorMap& colors, const RasterImage& image,
                       std::size_t tile_height = 0, std::size_t threads = 1);

/// Per-record footprint of the idealized accounting: id 4 + MER 16 +
/// label 1 + area 4 + mean 12 bytes.
inline constexpr std::uint64_t kNominalRecordBytes = 37;

/// n_segments * 37 bytes.
std::uint64_t memory_estimate(std::uint64_t n_segments);

/// What this implementation's records actually occupy.
std::uint64_t memory_actual(std::uint64_t n_segments);

/// CSV: id,min_row,min_col,max_row,max_col,color_code,area,mean_r,mean_g,mean_b
std::string sdt_to_csv(const SegmentTable& table);

}  // namespace qnq

#endif  // QNQ_SDT_HPP
