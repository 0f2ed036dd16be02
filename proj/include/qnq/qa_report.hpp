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

#ifndef QNQ_QA_REPORT_HPP
#define QNQ_QA_REPORT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qnq/color_constancy.hpp"
#include "qnq/color_naming.hpp"
#include "qnq/raster.hpp"
#include "qnq/segmentation.hpp"
#include "qnq/vq.hpp"

namespace qnq {

enum class Orientation : std::uint8_t { Minimize, Maximize };
std::string_view to_string(Orientation orientation);

/// One indicator measured for every algorithm, in a fixed column order.
struct IndicatorRow {
  std::string name;
  Orientation orientation = Orientation::Minimize;
  std::vector<double> values;
};

struct ZScoreRow {
  std::vector<double> values;
  bool degenerate = false;  // all inputs equal; values are all zero
};

/// (v - mean) / s with the sample standard deviation (divisor n - 1).
/// Throws Usage for fewer than two values.
ZScoreRow zscore_row(std::span<const double> values);

/// Column sums of raw z-scores. Throws Usage on an empty or ragged table.
std::vector<double> ultimate_score(std::span<const ZScoreRow> rows);

/// Column sums after negating rows whose orientation is Minimize, so that
/// larger always reads as better. Throws Usage if the two spans disagree.
std::vector<double> oriented_score(std::span<const IndicatorRow> rows,
                                   std::span<const ZScoreRow> z);

struct IndicatorTable {
  std::vector<std::string> columns;
  std::vector<IndicatorRow> rows;
};

struct ZScoreTable {
  std::vector<std::string> columns;
  std::vector<std::string> row_names;
  std::vector<Orientation> orientations;
  std::vector<ZScoreRow> rows;
  std::vector<double> ultimate;
  std::vector<double> oriented;
};

ZScoreTable standardize(const IndicatorTable& table);

/// Comma-separated, header "indicator,orientation,<columns...>", reals
/// printed with %.6f.
std::string indicators_csv(const IndicatorTable& table);
/// Same layout plus the trailing "ultimate" and "oriented_score" rows.
std::string zscores_csv(const ZScoreTable& table);

struct CrossValidationConfig {
  const ColorDictionary* dictionary = nullptr;  // null: shipped default
  ConstancyConfig constancy;
  KMeansConfig kmeans;
  Connectivity connectivity = Connectivity::Eight;
  std::size_t tile_height = 0;  // 0: whole image per stripe
  std::size_t threads = 1;
};

/// Columns: deductive, kmeans-train-1 .. kmeans-train-n, hybrid. For each
/// image, five rows: RMSE R, G, B of the object-mean view of the
/// constancy-normalized image, segment count and mean segment area.
/// Column kmeans-train-j trains on image j and applies the converged
/// codebook to the others. Throws Usage for fewer than two images.
IndicatorTable cross_validate(std::span<const RasterImage> images,
                              const CrossValidationConfig& config);

}  // namespace qnq

#endif  // QNQ_QA_REPORT_HPP
