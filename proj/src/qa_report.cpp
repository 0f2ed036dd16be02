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

#include "qnq/qa_report.hpp"

#include <cmath>
#include <cstdio>

#include "qnq/error.hpp"
#include "qnq/reconstruction.hpp"
#include "qnq/sdt.hpp"

namespace qnq {

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::Minimize ? "minimize" : "maximize";
}

ZScoreRow zscore_row(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) fail(ErrorKind::Usage, "z-scores need at least two values");
  long double mean = 0.0L;
  for (double v : values) mean += v;
  mean /= n;
  long double ss = 0.0L;
  for (double v : values) ss += (v - mean) * (v - mean);
  ZScoreRow out{std::vector<double>(n, 0.0), false};
  if (ss == 0.0L) {
    out.degenerate = true;
    return out;
  }
  const long double sd = std::sqrt(ss / (n - 1));
  for (std::size_t i = 0; i < n; ++i) out.values[i] = static_cast<double>((values[i] - mean) / sd);
  return out;
}

std::vector<double> ultimate_score(std::span<const ZScoreRow> rows) {
  if (rows.empty()) fail(ErrorKind::Usage, "no z-score rows");
  std::vector<double> sums(rows.front().values.size(), 0.0);
  for (const auto& r : rows) {
    if (r.values.size() != sums.size()) fail(ErrorKind::Usage, "ragged z-score table");
    for (std::size_t c = 0; c < sums.size(); ++c) sums[c] += r.values[c];
  }
  return sums;
}

std::vector<double> oriented_score(std::span<const IndicatorRow> rows, std::span<const ZScoreRow> z) {
  if (rows.size() != z.size()) fail(ErrorKind::Usage, "indicator and z-score tables differ in length");
  std::vector<ZScoreRow> flipped(z.begin(), z.end());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].orientation == Orientation::Minimize)
      for (double& v : flipped[i].values) v = -v;
  return ultimate_score(flipped);
}

ZScoreTable standardize(const IndicatorTable& table) {
  ZScoreTable out;
  out.columns = table.columns;
  for (const auto& row : table.rows) {
    if (row.values.size() != table.columns.size())
      fail(ErrorKind::Usage, "row " + row.name + " does not match the column count");
    out.row_names.push_back(row.name);
    out.orientations.push_back(row.orientation);
    out.rows.push_back(zscore_row(row.values));
  }
  out.ultimate = ultimate_score(out.rows);
  out.oriented = oriented_score(table.rows, out.rows);
  return out;
}

namespace {

std::string header(std::span<const std::string> columns) {
  std::string s = "indicator,orientation";
  for (const auto& c : columns) s += "," + c;
  return s + "\n";
}

void append_values(std::string& s, std::span<const double> values) {
  char buf[64];
  for (double v : values) {
    std::snprintf(buf, sizeof buf, ",%.6f", v);
    s += buf;
  }
  s += "\n";
}

}  // namespace

std::string indicators_csv(const IndicatorTable& table) {
  std::string s = header(table.columns);
  for (const auto& r : table.rows) {
    s += r.name + "," + std::string(to_string(r.orientation));
    append_values(s, r.values);
  }
  return s;
}

std::string zscores_csv(const ZScoreTable& table) {
  std::string s = header(table.columns);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    s += table.row_names[i] + "," + std::string(to_string(table.orientations[i]));
    append_values(s, table.rows[i].values);
  }
  s += "ultimate,raw";
  append_values(s, table.ultimate);
  s += "oriented_score,larger_is_better";
  append_values(s, table.oriented);
  return s;
}

namespace {

struct ArmResult {
  std::array<double, kBands> rmse{};
  double segments = 0;
  double mean_area = 0;
};

ArmResult evaluate(const RasterImage& image, const ColorMap& map, const CrossValidationConfig& cfg) {
  TileScheme scheme;
  scheme.tile_height = cfg.tile_height == 0 ? image.height() : std::min(cfg.tile_height, image.height());
  const LabelMap labels = label_components_streamed(map, scheme, cfg.connectivity, cfg.threads);
  const SegmentTable table = build_sdt(labels, map, image, scheme.tile_height, cfg.threads);
  const RasterImage view = object_mean_view(labels, table);
  ArmResult r;
  r.rmse = rmse_all(image, view);
  r.segments = static_cast<double>(labels.segment_count);
  r.mean_area = static_cast<double>(image.pixel_count()) / r.segments;
  return r;
}

}  // namespace

IndicatorTable cross_validate(std::span<const RasterImage> images, const CrossValidationConfig& config) {
  const std::size_t n = images.size();
  if (n < 2) fail(ErrorKind::Usage, "cross-validation needs at least two images");
  const ColorDictionary& dict = config.dictionary ? *config.dictionary : ColorDictionary::default_dictionary();

  std::vector<RasterImage> normalized;
  std::vector<ColorMap> fine;
  for (const auto& img : images) {
    normalized.push_back(color_constancy(img, config.constancy));
    fine.push_back(quantize_image(normalized.back(), dict, config.tile_height, config.threads));
  }

  KMeansConfig random_cfg = config.kmeans;
  random_cfg.init = InitMode::Random;
  random_cfg.threads = config.threads;
  KMeansConfig hybrid_cfg = random_cfg;
  hybrid_cfg.init = InitMode::Deductive;

  IndicatorTable table;
  table.columns.push_back("deductive");
  for (std::size_t j = 0; j < n; ++j) table.columns.push_back("kmeans-train-" + std::to_string(j + 1));
  table.columns.push_back("hybrid");

  // results[column][image]
  std::vector<std::vector<ArmResult>> results(n + 2, std::vector<ArmResult>(n));
  for (std::size_t i = 0; i < n; ++i) results[0][i] = evaluate(normalized[i], fine[i], config);
  for (std::size_t j = 0; j < n; ++j) {
    const KMeansResult trained = kmeans_run(normalized[j], random_cfg);
    for (std::size_t i = 0; i < n; ++i) {
      const ColorMap map = i == j ? trained.assignment
                                  : apply_codebook(normalized[i], trained.codebook, config.threads);
      results[1 + j][i] = evaluate(normalized[i], map, config);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const KMeansResult hybrid = kmeans_run(normalized[i], hybrid_cfg, fine[i]);
    results[n + 1][i] = evaluate(normalized[i], hybrid.assignment, config);
  }

  static constexpr const char* kBandNames[kBands] = {"R", "G", "B"};
  for (std::size_t i = 0; i < n; ++i) {
    const std::string prefix = "image-" + std::to_string(i + 1) + " ";
    for (std::size_t b = 0; b < kBands; ++b) {
      IndicatorRow row{prefix + "rmse_" + kBandNames[b], Orientation::Minimize, {}};
      for (const auto& col : results) row.values.push_back(col[i].rmse[b]);
      table.rows.push_back(std::move(row));
    }
    IndicatorRow seg{prefix + "segments", Orientation::Minimize, {}};
    IndicatorRow area{prefix + "mean_area", Orientation::Maximize, {}};
    for (const auto& col : results) {
      seg.values.push_back(col[i].segments);
      area.values.push_back(col[i].mean_area);
    }
    table.rows.push_back(std::move(seg));
    table.rows.push_back(std::move(area));
  }
  return table;
}

}  // namespace qnq
