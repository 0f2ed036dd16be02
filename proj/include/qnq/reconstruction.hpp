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

#ifndef QNQ_RECONSTRUCTION_HPP
#define QNQ_RECONSTRUCTION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qnq/raster.hpp"
#include "qnq/sdt.hpp"
#include "qnq/segmentation.hpp"

namespace qnq {

/// Every pixel replaced by its segment's mean, rounded half-up to 8 bits.
/// Throws Integrity when an id has no record.
RasterImage object_mean_view(const LabelMap& labels, const SegmentTable& table);

/// Unrounded variant: band-interleaved doubles, width * height * 3 values.
std::vector<double> object_mean_view_real(const LabelMap& labels, const SegmentTable& table);

/// sqrt(sum_i (P_b(i) - P*_b(i))^2 / N). Throws Usage on size mismatch.
double rmse(const RasterImage& original, const RasterImage& approx, std::size_t band);

std::array<double, kBands> rmse_all(const RasterImage& original, const RasterImage& approx);

/// Per-band squared error against a real-valued approximation
/// (band-interleaved, same layout as RasterImage samples).
std::array<double, kBands> sse_real(const RasterImage& original, std::span<const double> approx);

struct ErrorImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> abs_diff;  // band-interleaved |P - P*|
  std::vector<double> norm;            // per-pixel Euclidean norm over bands

  double norm_min() const;
  double norm_max() const;
  double norm_mean() const;
  /// Norm scaled linearly from [0, max] onto {0..255}; all zero if max == 0.
  std::vector<std::uint8_t> norm_to_gray() const;
};

ErrorImage error_image(const RasterImage& original, const RasterImage& approx);

struct CompressionReport {
  std::size_t levels = 0;
  unsigned bits_per_pixel = 0;
  double ratio_vs_24bit = 0.0;
  /// False for level counts other than 50 and 12 (ceil(log2) generalization).
  bool nominal_accounting = false;
};

/// 50 levels -> 6 bits (4:1), 12 levels -> 4 bits (6:1); otherwise
/// ceil(log2(levels)) bits. Throws Range for levels < 2.
CompressionReport compression_report(std::size_t levels);

}  // namespace qnq

#endif  // QNQ_RECONSTRUCTION_HPP
