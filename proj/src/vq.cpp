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

#include "qnq/vq.hpp"

#include <limits>
#include <random>
#include <string>
#include <unordered_set>

#include "qnq/color_naming.hpp"
#include "qnq/error.hpp"
#include "qnq/parallel.hpp"

namespace qnq {

namespace {

// Uniform integer in [0, bound] by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t uniform_upto(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

struct ClusterSums {
  std::vector<std::array<std::uint64_t, kBands>> sums;
  std::vector<std::uint64_t> counts;

  explicit ClusterSums(std::size_t k) : sums(k), counts(k, 0) {}

  void merge(const ClusterSums& o) {
    for (std::size_t c = 0; c < counts.size(); ++c) {
      counts[c] += o.counts[c];
      for (std::size_t b = 0; b < kBands; ++b) sums[c][b] += o.sums[c][b];
    }
  }
};

std::uint8_t nearest(const std::uint8_t* px, const Codebook& cb) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < cb.centroids.size(); ++i) {
    const Centroid& c = cb.centroids[i];
    const double d0 = px[0] - c[0];
    const double d1 = px[1] - c[1];
    const double d2 = px[2] - c[2];
    const double d = d0 * d0 + d1 * d1 + d2 * d2;
    if (d < best) {
      best = d;
      best_i = i;
    }
  }
  return static_cast<std::uint8_t>(best_i);
}

void check_codebook(const Codebook& cb) {
  if (cb.centroids.empty()) fail(ErrorKind::Usage, "codebook is empty");
  if (cb.k() > kMaxCodebookSize)
    fail(ErrorKind::Usage, "codebook larger than " + std::to_string(kMaxCodebookSize));
}

void check_map(const RasterImage& image, const ColorMap& map) {
  if (map.width != image.width() || map.height != image.height())
    fail(ErrorKind::Usage, "map and image dimensions differ");
}

std::vector<RowRange> stripes_for(const RasterImage& image, std::size_t tile_height) {
  if (tile_height == 0) tile_height = image.height();
  return stripe_ranges(image.height(), std::min(tile_height, image.height()));
}

}  // namespace

void KMeansConfig::validate() const {
  if (k < 1 || k > kMaxCodebookSize)
    fail(ErrorKind::Usage, "k must lie in [1, 256], got " + std::to_string(k));
  if (max_iterations < 1) fail(ErrorKind::Usage, "max iterations must be at least 1");
  if (!(change_threshold > 0.0 && change_threshold < 1.0))
    fail(ErrorKind::Usage, "change threshold must lie in (0, 1)");
}

Codebook init_random(const RasterImage& image, std::size_t k, std::uint64_t seed) {
  const std::size_t n = image.pixel_count();
  if (k == 0) fail(ErrorKind::Usage, "k must be positive");
  if (k > n)
    fail(ErrorKind::Usage, "k = " + std::to_string(k) + " exceeds pixel count " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::unordered_set<std::size_t> chosen;
  std::vector<std::size_t> order;
  chosen.reserve(k * 2);
  order.reserve(k);
  for (std::size_t j = n - k; j < n; ++j) {
    const std::size_t t = uniform_upto(rng, j);
    const std::size_t pick = chosen.count(t) ? j : t;
    chosen.insert(pick);
    order.push_back(pick);
  }
  Codebook cb;
  cb.centroids.reserve(k);
  for (std::size_t idx : order) {
    const Rgb p = image.pixel(idx);
    cb.centroids.push_back({double(p[0]), double(p[1]), double(p[2])});
  }
  return cb;
}

Codebook init_deductive(const RasterImage& image, const ColorMap& fine) {
  check_map(image, fine);
  ClusterSums acc(kFineLevels);
  const auto s = image.samples();
  for (std::size_t i = 0; i < fine.codes.size(); ++i) {
    const std::uint8_t c = fine.codes[i];
    if (c >= kFineLevels) fail(ErrorKind::Integrity, "fine code out of range");
    ++acc.counts[c];
    for (std::size_t b = 0; b < kBands; ++b) acc.sums[c][b] += s[i * kBands + b];
  }
  Codebook cb;
  for (std::size_t c = 0; c < kFineUnknown; ++c) {
    if (acc.counts[c] == 0) continue;
    Centroid m{};
    for (std::size_t b = 0; b < kBands; ++b)
      m[b] = static_cast<double>(acc.sums[c][b]) / static_cast<double>(acc.counts[c]);
    cb.centroids.push_back(m);
  }
  if (cb.centroids.empty()) fail(ErrorKind::Usage, "no named fine category is populated");
  return cb;
}

ColorMap apply_codebook(const RasterImage& image, const Codebook& codebook, std::size_t threads) {
  check_codebook(codebook);
  ColorMap out(image.width(), image.height(), codebook.k());
  const auto s = image.samples();
  const auto stripes = stripes_for(image, 256);
  parallel_for(stripes.size(), threads, [&](std::size_t t) {
    const std::size_t begin = stripes[t].begin * image.width();
    const std::size_t end = stripes[t].end * image.width();
    const std::uint8_t* prev = nullptr;
    std::uint8_t prev_code = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint8_t* px = s.data() + i * kBands;
      if (!prev || px[0] != prev[0] || px[1] != prev[1] || px[2] != prev[2]) {
        prev_code = nearest(px, codebook);
        prev = px;
      }
      out.codes[i] = prev_code;
    }
  });
  return out;
}

Codebook update_centroids(const RasterImage& image, const ColorMap& assignment,
                          const Codebook& previous, std::size_t tile_height, std::size_t threads) {
  check_map(image, assignment);
  check_codebook(previous);
  const std::size_t k = previous.k();
  const auto stripes = stripes_for(image, tile_height);
  std::vector<ClusterSums> partial(stripes.size(), ClusterSums(k));
  const auto s = image.samples();
  parallel_for(stripes.size(), threads, [&](std::size_t t) {
    ClusterSums& acc = partial[t];
    for (std::size_t i = stripes[t].begin * image.width(); i < stripes[t].end * image.width(); ++i) {
      const std::uint8_t c = assignment.codes[i];
      if (c >= k) fail(ErrorKind::Integrity, "assignment code exceeds codebook size");
      ++acc.counts[c];
      for (std::size_t b = 0; b < kBands; ++b) acc.sums[c][b] += s[i * kBands + b];
    }
  });
  ClusterSums total(k);
  for (const auto& p : partial) total.merge(p);
  Codebook next = previous;
  for (std::size_t c = 0; c < k; ++c) {
    if (total.counts[c] == 0) continue;
    for (std::size_t b = 0; b < kBands; ++b)
      next.centroids[c][b] = static_cast<double>(total.sums[c][b]) / static_cast<double>(total.counts[c]);
  }
  return next;
}

double assignment_sse(const RasterImage& image, const ColorMap& assignment, const Codebook& codebook,
                      std::size_t tile_height, std::size_t threads) {
  check_map(image, assignment);
  check_codebook(codebook);
  const auto stripes = stripes_for(image, tile_height);
  std::vector<long double> partial(stripes.size(), 0.0L);
  const auto s = image.samples();
  parallel_for(stripes.size(), threads, [&](std::size_t t) {
    long double acc = 0.0L;
    for (std::size_t i = stripes[t].begin * image.width(); i < stripes[t].end * image.width(); ++i) {
      const Centroid& c = codebook.centroids.at(assignment.codes[i]);
      for (std::size_t b = 0; b < kBands; ++b) {
        const long double d = static_cast<long double>(s[i * kBands + b]) - c[b];
        acc += d * d;
      }
    }
    partial[t] = acc;
  });
  long double sum = 0.0L;
  for (long double p : partial) sum += p;
  return static_cast<double>(sum);
}

KMeansResult kmeans_run(const RasterImage& image, const KMeansConfig& config) {
  config.validate();
  if (config.init == InitMode::Deductive)
    fail(ErrorKind::Usage, "deductive initialization needs a fine color map");
  return kmeans_run(image, config, init_random(image, config.k, config.seed));
}

KMeansResult kmeans_run(const RasterImage& image, const KMeansConfig& config, const ColorMap& fine) {
  config.validate();
  if (config.init == InitMode::Deductive) return kmeans_run(image, config, init_deductive(image, fine));
  return kmeans_run(image, config, init_random(image, config.k, config.seed));
}

KMeansResult kmeans_run(const RasterImage& image, const KMeansConfig& config, Codebook initial) {
  config.validate();
  check_codebook(initial);
  KMeansResult r;
  r.codebook = std::move(initial);
  r.assignment = apply_codebook(image, r.codebook, config.threads);
  r.sse_trace.push_back(assignment_sse(image, r.assignment, r.codebook, config.tile_height, config.threads));
  const double n = static_cast<double>(image.pixel_count());
  for (std::size_t it = 1; it <= config.max_iterations; ++it) {
    Codebook next = update_centroids(image, r.assignment, r.codebook, config.tile_height, config.threads);
    ColorMap reassigned = apply_codebook(image, next, config.threads);
    std::uint64_t changed = 0;
    for (std::size_t i = 0; i < reassigned.codes.size(); ++i)
      changed += reassigned.codes[i] != r.assignment.codes[i];
    r.codebook = std::move(next);
    r.assignment = std::move(reassigned);
    r.sse_trace.push_back(assignment_sse(image, r.assignment, r.codebook, config.tile_height, config.threads));
    r.changed_trace.push_back(changed);
    r.iterations_used = it;
    if (static_cast<double>(changed) < config.change_threshold * n) break;
  }
  return r;
}

}  // namespace qnq
