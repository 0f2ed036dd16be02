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

#ifndef QNQ_PIPELINE_HPP
#define QNQ_PIPELINE_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qnq/color_constancy.hpp"
#include "qnq/color_naming.hpp"
#include "qnq/contours.hpp"
#include "qnq/raster.hpp"
#include "qnq/reconstruction.hpp"
#include "qnq/sdt.hpp"
#include "qnq/segmentation.hpp"
#include "qnq/vq.hpp"

namespace qnq {

enum class Quantizer : std::uint8_t { Rgbiam, Kmeans, Hybrid };
std::string_view to_string(Quantizer q);
/// Throws Usage for anything but "rgbiam", "kmeans" or "hybrid".
Quantizer parse_quantizer(std::string_view text);

/// Artifact groups selectable with --emit. report.json and timings.json
/// are always written.
inline constexpr std::array<std::string_view, 8> kArtifactGroups = {
    "constancy", "maps", "segments", "contours", "sdt", "reconstruction", "error", "texture"};

/// Working bytes per pixel assumed when sizing stripes from the RAM budget.
inline constexpr std::size_t kTileBytesPerPixel = 32;

struct PipelineConfig {
  std::filesystem::path input;
  std::filesystem::path output_dir;
  Quantizer quantizer = Quantizer::Rgbiam;
  std::optional<std::filesystem::path> dictionary_path;
  std::size_t tile_height = 0;  // 0: derived from ram_budget
  std::size_t ram_budget = kDefaultRamBudget;
  Connectivity connectivity = Connectivity::Eight;
  ConstancyConfig constancy;
  KMeansConfig kmeans;
  std::size_t texture_window = 3;
  std::set<std::string> emit;  // empty: every group
  std::size_t threads = 1;

  /// Throws Usage on inconsistent settings or an unknown artifact group.
  void validate() const;
  bool emits(std::string_view group) const;
};

/// Everything stages 2 to 6 derive for one map level.
struct LevelOutputs {
  std::string name;  // "fine", "coarse" or "vq"
  ColorMap map;
  std::vector<Rgb> palette;
  LabelMap labels;
  AuraMap aura4;
  AuraMap aura8;
  std::vector<std::uint8_t> texture;
  SegmentTable sdt;
  std::vector<std::uint64_t> perimeters;
  RasterImage reconstruction;
  ErrorImage error;
  std::array<double, kBands> rmse{};
};

struct StageTimes {
  // Compute time per stage in milliseconds, stages 1 to 6.
  std::array<double, 6> compute_ms{};
  double read_ms = 0;
  double write_ms = 0;
};

struct StageOutputs {
  std::size_t width = 0;
  std::size_t height = 0;
  TileScheme scheme;
  RasterImage constancy;
  ConstancyTrace constancy_trace;
  std::optional<KMeansResult> kmeans;
  std::vector<LevelOutputs> levels;
  StageTimes times;
};

/// Stages 1 to 6 in memory, no file I/O.
StageOutputs compute_stages(const RasterImage& input, const PipelineConfig& config,
                            const ColorDictionary& dict);

/// Deterministic run report. Timing lives in timings_json() instead.
nlohmann::ordered_json report_json(const StageOutputs& out, const PipelineConfig& config,
                                   const std::vector<std::string>& artifacts);
nlohmann::ordered_json timings_json(const StageTimes& times);

struct PipelineResult {
  StageOutputs outputs;
  std::vector<std::string> artifacts;  // file names written, in order
  std::vector<std::string> warnings;
};

/// Reads the input, runs every stage and writes the selected artifacts.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Writes indicators.csv, zscores.csv and crossval.json into config's
/// output directory.
void run_cross_validation(const std::vector<std::filesystem::path>& inputs,
                          const PipelineConfig& config);

}  // namespace qnq

#endif  // QNQ_PIPELINE_HPP
