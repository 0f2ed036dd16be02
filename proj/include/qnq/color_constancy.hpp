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

#ifndef QNQ_COLOR_CONSTANCY_HPP
#define QNQ_COLOR_CONSTANCY_HPP

// Per-channel self-organizing histogram stretch.
//
// Each channel's histogram is sorted into one of four shapes: a central mode
// alone, or a central mode accompanied by a dark (background) spike, a
// bright (foreground) spike, or both. Detected spikes are sent to 0 and 255;
// the remaining mass is stretched linearly onto [1, 254] between its
// percent-clip anchors. Passes repeat until every channel reads as central
// only, or the pass limit is reached.
//
// Spike detection: the background spike is the maximal run of bins above
// eps = total / 10000 starting at bin 0, provided the run is followed by a
// bin at or below eps and some mass remains beyond it; its mass must exceed
// spike_fraction * total, and it may span at most kMaxSpikeWidth bins. The
// foreground spike mirrors this from bin 255.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qnq/raster.hpp"

namespace qnq {

inline constexpr int kMaxSpikeWidth = 64;

enum class DistributionCategory { CentralOnly, Background, Foreground, Both };

std::string_view to_string(DistributionCategory category);

struct StretchParams {
  /// Samples strictly below this bin are background (mapped to 0).
  std::optional<std::uint8_t> background_cut;
  /// Samples strictly above this bin are foreground (mapped to 255).
  std::optional<std::uint8_t> foreground_cut;
  std::uint8_t low = 0;
  std::uint8_t high = 0;

  friend bool operator==(const StretchParams&, const StretchParams&) = default;
};

struct ConstancyConfig {
  double spike_fraction = 0.02;
  double clip_percent = 0.02;  // a fraction: 0.02 clips 2% per tail
  std::size_t max_passes = 3;
};

/// Spike detection result for one channel. Cut fields are set iff the
/// corresponding spike was found.
struct SpikeAnalysis {
  DistributionCategory category = DistributionCategory::CentralOnly;
  std::optional<std::uint8_t> background_cut;
  std::optional<std::uint8_t> foreground_cut;
};

SpikeAnalysis analyze_spikes(const Histogram256& hist, double spike_fraction = 0.02);

/// Throws Usage on an empty histogram.
DistributionCategory classify_distribution(const Histogram256& hist,
                                           double spike_fraction = 0.02);

/// Cuts come from the spike runs named by `category`; anchors are the
/// clip_percent and (1 - clip_percent) quantile bins of what remains.
/// clip_percent must lie in [0, 0.5).
StretchParams plan_stretch(const Histogram256& hist, DistributionCategory category,
                           double clip_percent = 0.02);

/// Monotone 256-entry lookup table realizing `params`.
std::vector<std::uint8_t> stretch_lut(const StretchParams& params);

/// Applies `params` to every `stride`-th sample starting at `offset`.
void stretch_channel(std::span<std::uint8_t> samples, const StretchParams& params,
                     std::size_t offset = 0, std::size_t stride = 1);

struct ConstancyTrace {
  std::size_t passes = 0;
  /// Category per pass per channel, as classified before stretching.
  std::vector<std::array<DistributionCategory, kBands>> categories;
};

RasterImage color_constancy(const RasterImage& image, const ConstancyConfig& config = {},
                            ConstancyTrace* trace = nullptr);

}  // namespace qnq

#endif  // QNQ_COLOR_CONSTANCY_HPP
