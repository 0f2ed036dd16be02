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

#ifndef QNQ_VQ_HPP
#define QNQ_VQ_HPP

// k-means vector quantization in RGB.
//
// One run: assign every pixel to its nearest centroid (squared Euclidean
// distance, ties to the lowest index), then up to I rounds of
// update-then-reassign. A round stops the run early when fewer than
// change_threshold * N pixels moved. sse_trace[0] is the error of the
// initial assignment and sse_trace[t] the error after round t.
//
// Centroid updates use exact integer sums per fixed row stripe, so results
// are identical for any thread count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qnq/color_map.hpp"
#include "qnq/raster.hpp"

namespace qnq {

using Centroid = std::array<double, kBands>;

struct Codebook {
  std::vector<Centroid> centroids;

  std::size_t k() const noexcept { return centroids.size(); }
  friend bool operator==(const Codebook&, const Codebook&) = default;
};

/// Largest codebook an 8-bit assignment map can index.
inline constexpr std::size_t kMaxCodebookSize = 256;

enum class InitMode : std::uint8_t { Random, Deductive };

struct KMeansConfig {
  std::size_t k = 49;
  std::size_t max_iterations = 3;
  double change_threshold = 0.05;
  InitMode init = InitMode::Random;
  std::uint64_t seed = 0;
  std::size_t tile_height = 256;  // rows per accumulation stripe
  std::size_t threads = 1;

  /// Throws Usage unless 1 <= k <= 256, I >= 1, 0 < threshold < 1.
  void validate() const;
};

/// k distinct pixel positions drawn without replacement with mt19937_64
/// (Floyd's algorithm, rejection-sampled bounds). Throws Usage if k > N.
Codebook init_random(const RasterImage& image, std::size_t k, std::uint64_t seed);

/// One centroid per non-empty named fine category (codes 0..48), ordered by
/// code. Pixels coded "unknown" are ignored.
Codebook init_deductive(const RasterImage& image, const ColorMap& fine);

/// Nearest-centroid assignment, ties to the lowest index.
ColorMap apply_codebook(const RasterImage& image, const Codebook& codebook,
                        std::size_t threads = 1);

/// Exact per-cluster means of `assignment`; clusters with no pixels keep
/// their centroid from `previous`.
Codebook update_centroids(const RasterImage& image, const ColorMap& assignment,
                          const Codebook& previous, std::size_t tile_height = 256,
                          std::size_t threads = 1);

/// Sum over pixels of the squared distance to the assigned centroid.
double assignment_sse(const RasterImage& image, const ColorMap& assignment,
                      const Codebook& codebook, std::size_t tile_height = 256,
                      std::size_t threads = 1);

struct KMeansResult {
  Codebook codebook;     // centroids that produced `assignment`
  ColorMap assignment;   // levels == codebook.k()
  std::size_t iterations_used = 0;
  std::vector<double> sse_trace;
  std::vector<std::uint64_t> changed_trace;  // pixels reassigned per round
};

/// Random init only; the deductive mode needs a fine map (see below).
KMeansResult kmeans_run(const RasterImage& image, const KMeansConfig& config);

/// Deductive (hybrid) init from `fine` when config.init is Deductive,
/// otherwise random init and `fine` is ignored.
KMeansResult kmeans_run(const RasterImage& image, const KMeansConfig& config,
                        const ColorMap& fine);

KMeansResult kmeans_run(const RasterImage& image, const KMeansConfig& config,
                        Codebook initial);

}  // namespace qnq

#endif  // QNQ_VQ_HPP
