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

#ifndef QNQ_RASTER_HPP
#define QNQ_RASTER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qnq {

inline constexpr std::size_t kBands = 3;

using Rgb = std::array<std::uint8_t, 3>;

/// Row-major, band-interleaved 8-bit RGB raster.
class RasterImage {
 public:
  RasterImage() = default;
  /// Zero-filled image; width and height must be >= 1.
  RasterImage(std::size_t width, std::size_t height);
  /// Adopts `samples`, which must hold exactly width * height * 3 values.
  RasterImage(std::size_t width, std::size_t height,
              std::vector<std::uint8_t> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return width_ * height_; }
  bool empty() const noexcept { return samples_.empty(); }

  std::span<const std::uint8_t> samples() const noexcept { return samples_; }
  std::span<std::uint8_t> samples() noexcept { return samples_; }

  std::uint8_t at(std::size_t row, std::size_t col, std::size_t band) const {
    return samples_[(row * width_ + col) * kBands + band];
  }
  std::uint8_t& at(std::size_t row, std::size_t col, std::size_t band) {
    return samples_[(row * width_ + col) * kBands + band];
  }
  Rgb pixel(std::size_t index) const {
    const std::uint8_t* p = samples_.data() + index * kBands;
    return {p[0], p[1], p[2]};
  }
  void set_pixel(std::size_t index, const Rgb& rgb) {
    std::uint8_t* p = samples_.data() + index * kBands;
    p[0] = rgb[0];
    p[1] = rgb[1];
    p[2] = rgb[2];
  }

  /// Samples of rows [row_begin, row_end).
  std::span<const std::uint8_t> rows(std::size_t row_begin,
                                     std::size_t row_end) const;

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> samples_;
};

/// Default streaming memory budget: 800 MB.
inline constexpr std::size_t kDefaultRamBudget = 800ull * 1000 * 1000;

/// Row-stripe tiling parameters.
struct TileScheme {
  std::size_t tile_height = 0;
  std::size_t ram_budget = kDefaultRamBudget;

  /// Largest stripe height whose tile-local buffers, at `bytes_per_pixel`
  /// of working state, fit in `ram_budget`. Never less than one row.
  static TileScheme from_budget(std::size_t width, std::size_t height,
                                std::size_t bytes_per_pixel,
                                std::size_t ram_budget = kDefaultRamBudget);

  /// Throws Usage unless 1 <= tile_height <= height.
  void validate(std::size_t height) const;
};

/// Half-open row interval [begin, end).
struct RowRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t rows() const noexcept { return end - begin; }
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

/// Disjoint top-to-bottom stripes covering [0, height).
std::vector<RowRange> stripe_ranges(std::size_t height, std::size_t tile_height);

/// Read-only view of one full-width stripe of an image.
struct RasterStripe {
  RowRange range;
  std::size_t width = 0;
  std::span<const std::uint8_t> samples;
};

std::vector<RasterStripe> stream_tiles(const RasterImage& image,
                                       const TileScheme& scheme);

struct Histogram256 {
  std::array<std::uint64_t, 256> bins{};
  std::uint64_t total = 0;

  Histogram256& operator+=(const Histogram256& other);
  friend bool operator==(const Histogram256&, const Histogram256&) = default;
};

Histogram256 compute_histogram(const RasterImage& image, std::size_t band);
Histogram256 compute_histogram(const RasterStripe& stripe, std::size_t band);

/// round(value * 255), half-up. Throws Range outside [0, 1].
std::uint8_t byte_encode_unit(double value);

}  // namespace qnq

#endif  // QNQ_RASTER_HPP
