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

#include "qnq/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qnq/error.hpp"

namespace qnq {

namespace {

void check_table(const LabelMap& labels, const SegmentTable& table) {
  if (table.records.size() < labels.segment_count)
    fail(ErrorKind::Integrity, "segment table has " + std::to_string(table.records.size()) +
                                   " records for " + std::to_string(labels.segment_count) +
                                   " segments");
}

void check_same_size(const RasterImage& a, const RasterImage& b) {
  if (a.width() != b.width() || a.height() != b.height())
    fail(ErrorKind::Usage, "image dimensions differ");
}

// Exact half-up rounding of sum / area without going through floating point.
std::uint8_t rounded_mean(std::uint64_t sum, std::uint64_t area) {
  return static_cast<std::uint8_t>((2 * sum + area) / (2 * area));
}

}  // namespace

RasterImage object_mean_view(const LabelMap& labels, const SegmentTable& table) {
  check_table(labels, table);
  std::vector<Rgb> palette(table.records.size());
  for (std::size_t id = 0; id < table.records.size(); ++id) {
    const auto& rec = table.records[id];
    if (rec.area == 0) fail(ErrorKind::Integrity, "empty segment record " + std::to_string(id));
    for (std::size_t b = 0; b < kBands; ++b) palette[id][b] = rounded_mean(rec.band_sums[b], rec.area);
  }
  RasterImage out(labels.width, labels.height);
  for (std::size_t i = 0; i < labels.ids.size(); ++i) {
    const SegmentId id = labels.ids[i];
    if (id >= palette.size()) fail(ErrorKind::Integrity, "no record for segment " + std::to_string(id));
    out.set_pixel(i, palette[id]);
  }
  return out;
}

std::vector<double> object_mean_view_real(const LabelMap& labels, const SegmentTable& table) {
  check_table(labels, table);
  std::vector<double> out(labels.ids.size() * kBands);
  for (std::size_t i = 0; i < labels.ids.size(); ++i) {
    const SegmentId id = labels.ids[i];
    if (id >= table.records.size())
      fail(ErrorKind::Integrity, "no record for segment " + std::to_string(id));
    for (std::size_t b = 0; b < kBands; ++b) out[i * kBands + b] = table.records[id].mean[b];
  }
  return out;
}

double rmse(const RasterImage& original, const RasterImage& approx, std::size_t band) {
  check_same_size(original, approx);
  if (band >= kBands) fail(ErrorKind::Usage, "band index must be 0, 1 or 2");
  const auto a = original.samples();
  const auto b = approx.samples();
  std::uint64_t sum = 0;  // exact for 8-bit data
  for (std::size_t i = band; i < a.size(); i += kBands) {
    const std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
    sum += static_cast<std::uint64_t>(d * d);
  }
  return std::sqrt(static_cast<double>(sum) / static_cast<double>(original.pixel_count()));
}

std::array<double, kBands> rmse_all(const RasterImage& original, const RasterImage& approx) {
  return {rmse(original, approx, 0), rmse(original, approx, 1), rmse(original, approx, 2)};
}

std::array<double, kBands> sse_real(const RasterImage& original, std::span<const double> approx) {
  const auto a = original.samples();
  if (approx.size() != a.size()) fail(ErrorKind::Usage, "approximation size mismatch");
  std::array<long double, kBands> sse{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double d = static_cast<long double>(a[i]) - approx[i];
    sse[i % kBands] += d * d;
  }
  return {static_cast<double>(sse[0]), static_cast<double>(sse[1]), static_cast<double>(sse[2])};
}

ErrorImage error_image(const RasterImage& original, const RasterImage& approx) {
  check_same_size(original, approx);
  ErrorImage e{original.width(), original.height(), std::vector<std::uint8_t>(original.samples().size()),
               std::vector<double>(original.pixel_count())};
  const auto a = original.samples();
  const auto b = approx.samples();
  for (std::size_t p = 0; p < e.norm.size(); ++p) {
    int sq = 0;
    for (std::size_t k = 0; k < kBands; ++k) {
      const int d = std::abs(static_cast<int>(a[p * kBands + k]) - b[p * kBands + k]);
      e.abs_diff[p * kBands + k] = static_cast<std::uint8_t>(d);
      sq += d * d;
    }
    e.norm[p] = std::sqrt(static_cast<double>(sq));
  }
  return e;
}

double ErrorImage::norm_min() const { return norm.empty() ? 0.0 : *std::min_element(norm.begin(), norm.end()); }

double ErrorImage::norm_max() const { return norm.empty() ? 0.0 : *std::max_element(norm.begin(), norm.end()); }

double ErrorImage::norm_mean() const {
  if (norm.empty()) return 0.0;
  return std::accumulate(norm.begin(), norm.end(), 0.0L) / static_cast<long double>(norm.size());
}

std::vector<std::uint8_t> ErrorImage::norm_to_gray() const {
  std::vector<std::uint8_t> out(norm.size(), 0);
  const double top = norm_max();
  if (top <= 0.0) return out;
  for (std::size_t i = 0; i < norm.size(); ++i)
    out[i] = static_cast<std::uint8_t>(std::floor(norm[i] / top * 255.0 + 0.5));
  return out;
}

CompressionReport compression_report(std::size_t levels) {
  if (levels < 2) fail(ErrorKind::Range, "compression report needs at least 2 levels");
  unsigned bits = 0;
  while ((std::size_t{1} << bits) < levels) ++bits;
  return {levels, bits, 24.0 / bits, levels == 50 || levels == 12};
}

}  // namespace qnq
