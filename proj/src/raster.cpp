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

#include "qnq/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qnq/error.hpp"

namespace qnq {

RasterImage::RasterImage(std::size_t width, std::size_t height)
    : RasterImage(width, height,
                  std::vector<std::uint8_t>(width * height * kBands, 0)) {}

RasterImage::RasterImage(std::size_t width, std::size_t height,
                         std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width == 0 || height == 0)
    fail(ErrorKind::Usage, "image dimensions must be at least 1x1");
  if (samples_.size() != width * height * kBands)
    fail(ErrorKind::Usage, "sample count " + std::to_string(samples_.size()) +
                               " does not match " + std::to_string(width) +
                               "x" + std::to_string(height) + "x3");
}

std::span<const std::uint8_t> RasterImage::rows(std::size_t row_begin,
                                                std::size_t row_end) const {
  const std::size_t stride = width_ * kBands;
  return std::span<const std::uint8_t>(samples_).subspan(
      row_begin * stride, (row_end - row_begin) * stride);
}

TileScheme TileScheme::from_budget(std::size_t width, std::size_t height,
                                   std::size_t bytes_per_pixel,
                                   std::size_t ram_budget) {
  const std::size_t row_bytes = std::max<std::size_t>(1, width * bytes_per_pixel);
  std::size_t rows = ram_budget / row_bytes;
  rows = std::clamp<std::size_t>(rows, 1, std::max<std::size_t>(1, height));
  return TileScheme{rows, ram_budget};
}

void TileScheme::validate(std::size_t height) const {
  if (tile_height < 1 || tile_height > height)
    fail(ErrorKind::Usage, "tile height " + std::to_string(tile_height) +
                               " outside [1, " + std::to_string(height) + "]");
}

std::vector<RowRange> stripe_ranges(std::size_t height, std::size_t tile_height) {
  if (tile_height == 0) fail(ErrorKind::Usage, "tile height must be positive");
  std::vector<RowRange> out;
  out.reserve((height + tile_height - 1) / tile_height);
  for (std::size_t row = 0; row < height; row += tile_height)
    out.push_back({row, std::min(height, row + tile_height)});
  return out;
}

std::vector<RasterStripe> stream_tiles(const RasterImage& image,
                                       const TileScheme& scheme) {
  scheme.validate(image.height());
  std::vector<RasterStripe> out;
  for (const RowRange& r : stripe_ranges(image.height(), scheme.tile_height))
    out.push_back({r, image.width(), image.rows(r.begin, r.end)});
  return out;
}

Histogram256& Histogram256::operator+=(const Histogram256& other) {
  for (std::size_t i = 0; i < bins.size(); ++i) bins[i] += other.bins[i];
  total += other.total;
  return *this;
}

namespace {

Histogram256 histogram_of(std::span<const std::uint8_t> samples,
                          std::size_t band) {
  if (band >= kBands) fail(ErrorKind::Usage, "band index must be 0, 1 or 2");
  Histogram256 h;
  for (std::size_t i = band; i < samples.size(); i += kBands) ++h.bins[samples[i]];
  h.total = samples.size() / kBands;
  return h;
}

}  // namespace

Histogram256 compute_histogram(const RasterImage& image, std::size_t band) {
  return histogram_of(image.samples(), band);
}

Histogram256 compute_histogram(const RasterStripe& stripe, std::size_t band) {
  return histogram_of(stripe.samples, band);
}

std::uint8_t byte_encode_unit(double value) {
  // Negated comparisons also reject NaN.
  if (!(value >= 0.0) || !(value <= 1.0))
    fail(ErrorKind::Range, "unit value outside [0, 1]: " + std::to_string(value));
  return static_cast<std::uint8_t>(std::floor(value * 255.0 + 0.5));
}

}  // namespace qnq
