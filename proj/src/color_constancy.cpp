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

#include "qnq/color_constancy.hpp"

#include <algorithm>

#include "qnq/error.hpp"

namespace qnq {

std::string_view to_string(DistributionCategory category) {
  switch (category) {
    case DistributionCategory::CentralOnly: return "central_only";
    case DistributionCategory::Background: return "background";
    case DistributionCategory::Foreground: return "foreground";
    case DistributionCategory::Both: return "both";
  }
  return "?";
}

namespace {

struct SpikeRuns {
  std::optional<std::uint8_t> background_cut;  // first gap bin after the dark run
  std::uint64_t background_mass = 0;
  std::optional<std::uint8_t> foreground_cut;  // last gap bin before the bright run
  std::uint64_t foreground_mass = 0;
};

// Separated end runs, independent of their mass. A run reaching past the
// outer kMaxSpikeWidth bins is the central mode itself, not a spike.
SpikeRuns find_end_runs(const Histogram256& hist) {
  const double eps = static_cast<double>(hist.total) / 10000.0;
  SpikeRuns runs;

  int j = 0;
  std::uint64_t mass = 0;
  while (j < 256 && static_cast<double>(hist.bins[j]) > eps) mass += hist.bins[j++];
  if (j > 0 && j <= kMaxSpikeWidth && mass < hist.total) {
    runs.background_cut = static_cast<std::uint8_t>(j);
    runs.background_mass = mass;
  }

  int k = 255;
  mass = 0;
  while (k >= 0 && static_cast<double>(hist.bins[k]) > eps) mass += hist.bins[k--];
  if (k < 255 && k >= 255 - kMaxSpikeWidth && mass < hist.total) {
    runs.foreground_cut = static_cast<std::uint8_t>(k);
    runs.foreground_mass = mass;
  }
  return runs;
}

}  // namespace

SpikeAnalysis analyze_spikes(const Histogram256& hist, double spike_fraction) {
  if (hist.total == 0) fail(ErrorKind::Usage, "cannot classify an empty histogram");
  const SpikeRuns runs = find_end_runs(hist);
  const double threshold = spike_fraction * static_cast<double>(hist.total);

  SpikeAnalysis out;
  if (runs.background_cut && static_cast<double>(runs.background_mass) > threshold)
    out.background_cut = runs.background_cut;
  if (runs.foreground_cut && static_cast<double>(runs.foreground_mass) > threshold)
    out.foreground_cut = runs.foreground_cut;

  if (out.background_cut && out.foreground_cut)
    out.category = DistributionCategory::Both;
  else if (out.background_cut)
    out.category = DistributionCategory::Background;
  else if (out.foreground_cut)
    out.category = DistributionCategory::Foreground;
  return out;
}

DistributionCategory classify_distribution(const Histogram256& hist, double spike_fraction) {
  return analyze_spikes(hist, spike_fraction).category;
}

StretchParams plan_stretch(const Histogram256& hist, DistributionCategory category,
                           double clip_percent) {
  if (hist.total == 0) fail(ErrorKind::Usage, "cannot plan a stretch for an empty histogram");
  if (!(clip_percent >= 0.0) || !(clip_percent < 0.5))
    fail(ErrorKind::Range, "clip percent must lie in [0, 0.5)");

  const SpikeRuns runs = find_end_runs(hist);
  StretchParams params;
  const bool has_background = category == DistributionCategory::Background ||
                              category == DistributionCategory::Both;
  const bool has_foreground = category == DistributionCategory::Foreground ||
                              category == DistributionCategory::Both;
  if (has_background) params.background_cut = runs.background_cut;
  if (has_foreground) params.foreground_cut = runs.foreground_cut;

  const int first = params.background_cut.value_or(0);
  const int last = params.foreground_cut.value_or(255);
  std::uint64_t retained = 0;
  for (int v = first; v <= last; ++v) retained += hist.bins[v];
  if (retained == 0) {
    params.low = params.high = static_cast<std::uint8_t>(first);
    return params;
  }

  const double tail = clip_percent * static_cast<double>(retained);
  std::uint64_t cum = 0;
  int low = first;
  for (int v = first; v <= last; ++v) {
    cum += hist.bins[v];
    if (static_cast<double>(cum) > tail) {
      low = v;
      break;
    }
  }
  cum = 0;
  int high = last;
  for (int v = last; v >= first; --v) {
    cum += hist.bins[v];
    if (static_cast<double>(cum) > tail) {
      high = v;
      break;
    }
  }
  params.low = static_cast<std::uint8_t>(low);
  params.high = static_cast<std::uint8_t>(std::max(low, high));
  return params;
}

std::vector<std::uint8_t> stretch_lut(const StretchParams& params) {
  std::vector<std::uint8_t> lut(256);
  const int low = params.low;
  const int high = params.high;
  const int span = high - low;
  for (int v = 0; v < 256; ++v) {
    int out = v;
    if (params.background_cut && v < *params.background_cut) {
      out = 0;
    } else if (params.foreground_cut && v > *params.foreground_cut) {
      out = 255;
    } else if (span > 0) {
      if (v <= low) {
        out = 1;
      } else if (v >= high) {
        out = 254;
      } else {
        // 1 + round_half_up((v - low) * 253 / span)
        out = 1 + ((v - low) * 253 * 2 + span) / (2 * span);
      }
    }
    lut[v] = static_cast<std::uint8_t>(out);
  }
  return lut;
}

void stretch_channel(std::span<std::uint8_t> samples, const StretchParams& params,
                     std::size_t offset, std::size_t stride) {
  if (stride == 0) fail(ErrorKind::Usage, "stride must be positive");
  const auto lut = stretch_lut(params);
  for (std::size_t i = offset; i < samples.size(); i += stride) samples[i] = lut[samples[i]];
}

RasterImage color_constancy(const RasterImage& image, const ConstancyConfig& config,
                            ConstancyTrace* trace) {
  RasterImage out = image;
  if (trace) *trace = {};
  for (std::size_t pass = 0; pass < config.max_passes; ++pass) {
    std::array<DistributionCategory, kBands> categories{};
    std::array<Histogram256, kBands> hists;
    bool all_central = true;
    for (std::size_t b = 0; b < kBands; ++b) {
      hists[b] = compute_histogram(out, b);
      categories[b] = classify_distribution(hists[b], config.spike_fraction);
      all_central = all_central && categories[b] == DistributionCategory::CentralOnly;
    }
    // The first pass always stretches; later passes only while spikes remain.
    if (pass > 0 && all_central) break;

    bool changed = false;
    for (std::size_t b = 0; b < kBands; ++b) {
      const auto params = plan_stretch(hists[b], categories[b], config.clip_percent);
      const auto lut = stretch_lut(params);
      auto samples = out.samples();
      for (std::size_t i = b; i < samples.size(); i += kBands) {
        const std::uint8_t mapped = lut[samples[i]];
        changed = changed || mapped != samples[i];
        samples[i] = mapped;
      }
    }
    if (trace) {
      trace->passes = pass + 1;
      trace->categories.push_back(categories);
    }
    if (!changed) break;
  }
  return out;
}

}  // namespace qnq
