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

#include "qnq/sdt.hpp"

#include <algorithm>
#include <cstdio>

#include "qnq/error.hpp"
#include "qnq/parallel.hpp"

namespace qnq {

SdtAccumulator::SdtAccumulator(std::size_t segment_count, std::size_t levels)
    : levels_(levels), records_(segment_count) {
  for (std::size_t i = 0; i < records_.size(); ++i) records_[i].id = static_cast<SegmentId>(i);
}

void SdtAccumulator::accumulate(const LabelMap& labels, const ColorMap& colors,
                                const RasterImage& image, RowRange rows) {
  const std::size_t w = labels.width;
  const auto samples = image.samples();
  for (std::size_t r = rows.begin; r < rows.end; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t i = r * w + c;
      const SegmentId id = labels.ids[i];
      if (id >= records_.size())
        fail(ErrorKind::Integrity, "segment id " + std::to_string(id) + " exceeds segment count");
      SegmentRecord& rec = records_[id];
      const std::uint8_t code = colors.codes[i];
      if (rec.area == 0) {
        rec.color_code = code;
        rec.mer = {r, c, r, c};
      } else {
        if (rec.color_code != code)
          fail(ErrorKind::Integrity, "segment " + std::to_string(id) + " spans color codes " +
                                         std::to_string(rec.color_code) + " and " +
                                         std::to_string(code));
        rec.mer.min_row = std::min(rec.mer.min_row, r);
        rec.mer.max_row = std::max(rec.mer.max_row, r);
        rec.mer.min_col = std::min(rec.mer.min_col, c);
        rec.mer.max_col = std::max(rec.mer.max_col, c);
      }
      ++rec.area;
      for (std::size_t b = 0; b < kBands; ++b) rec.band_sums[b] += samples[i * kBands + b];
    }
  }
}

void SdtAccumulator::merge(const SdtAccumulator& other) {
  if (other.records_.size() != records_.size())
    fail(ErrorKind::Usage, "cannot merge SDT partials of different sizes");
  for (std::size_t id = 0; id < records_.size(); ++id) {
    const SegmentRecord& src = other.records_[id];
    if (src.area == 0) continue;
    SegmentRecord& dst = records_[id];
    if (dst.area == 0) {
      dst = src;
      continue;
    }
    if (dst.color_code != src.color_code)
      fail(ErrorKind::Integrity, "segment " + std::to_string(id) + " spans two color codes");
    dst.mer.min_row = std::min(dst.mer.min_row, src.mer.min_row);
    dst.mer.min_col = std::min(dst.mer.min_col, src.mer.min_col);
    dst.mer.max_row = std::max(dst.mer.max_row, src.mer.max_row);
    dst.mer.max_col = std::max(dst.mer.max_col, src.mer.max_col);
    dst.area += src.area;
    for (std::size_t b = 0; b < kBands; ++b) dst.band_sums[b] += src.band_sums[b];
  }
}

SegmentTable SdtAccumulator::finalize() const {
  SegmentTable table{levels_, records_};
  for (auto& rec : table.records) {
    if (rec.area == 0)
      fail(ErrorKind::Integrity, "segment " + std::to_string(rec.id) + " has no pixels");
    for (std::size_t b = 0; b < kBands; ++b)
      rec.mean[b] = static_cast<double>(rec.band_sums[b]) / static_cast<double>(rec.area);
  }
  return table;
}

SegmentTable build_sdt(const LabelMap& labels, const ColorMap& colors, const RasterImage& image,
                       std::size_t tile_height, std::size_t threads) {
  if (labels.width != colors.width || labels.height != colors.height ||
      labels.width != image.width() || labels.height != image.height())
    fail(ErrorKind::Usage, "SDT inputs must share dimensions");
  if (tile_height == 0) tile_height = labels.height;
  const auto stripes = stripe_ranges(labels.height, tile_height);

  // Partials hold integer sums and min/max bounds, so the merged table does
  // not depend on how stripes were split among workers.
  if (threads <= 1 || stripes.size() == 1) {
    SdtAccumulator acc(labels.segment_count, colors.levels);
    for (const auto& rows : stripes) acc.accumulate(labels, colors, image, rows);
    return acc.finalize();
  }
  const std::size_t workers = std::min(threads, stripes.size());
  std::vector<SdtAccumulator> partial(workers, SdtAccumulator(labels.segment_count, colors.levels));
  parallel_for(workers, workers, [&](std::size_t t) {
    const std::size_t begin = stripes.size() * t / workers;
    const std::size_t end = stripes.size() * (t + 1) / workers;
    for (std::size_t s = begin; s < end; ++s) partial[t].accumulate(labels, colors, image, stripes[s]);
  });
  for (std::size_t t = 1; t < workers; ++t) partial[0].merge(partial[t]);
  return partial[0].finalize();
}

std::uint64_t memory_estimate(std::uint64_t n_segments) { return n_segments * kNominalRecordBytes; }

std::uint64_t memory_actual(std::uint64_t n_segments) { return n_segments * sizeof(SegmentRecord); }

std::string sdt_to_csv(const SegmentTable& table) {
  std::string out = "id,min_row,min_col,max_row,max_col,color_code,area,mean_r,mean_g,mean_b\n";
  char line[256];
  for (const auto& r : table.records) {
    const int n = std::snprintf(line, sizeof line, "%u,%zu,%zu,%zu,%zu,%u,%llu,%.6f,%.6f,%.6f\n",
                                static_cast<unsigned>(r.id), r.mer.min_row, r.mer.min_col,
                                r.mer.max_row, r.mer.max_col, static_cast<unsigned>(r.color_code),
                                static_cast<unsigned long long>(r.area), r.mean[0], r.mean[1],
                                r.mean[2]);
    out.append(line, static_cast<std::size_t>(n));
  }
  return out;
}

}  // namespace qnq
