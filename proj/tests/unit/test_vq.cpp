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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qnq/color_naming.hpp"
#include "qnq/error.hpp"
#include "qnq/parallel.hpp"
#include "qnq/vq.hpp"

using namespace qnq;

namespace {
RasterImage palette_image(std::mt19937_64& rng, std::size_t w, std::size_t h,
                          const std::vector<Rgb>& colors) {
  RasterImage img(w, h);
  for (std::size_t i = 0; i < img.pixel_count(); ++i) img.set_pixel(i, colors[rng() % colors.size()]);
  return img;
}
}  // namespace

TEST_CASE("random init") {
  std::mt19937_64 rng(73);
  const RasterImage img = oracle::random_image(rng, 4, 3);
  SUBCASE("k = N draws every pixel once") {
    const Codebook cb = init_random(img, 12, 5);
    std::multiset<std::array<double, 3>> got(cb.centroids.begin(), cb.centroids.end()), want;
    for (std::size_t i = 0; i < 12; ++i) {
      const Rgb p = img.pixel(i);
      want.insert({double(p[0]), double(p[1]), double(p[2])});
    }
    CHECK(got == want);
  }
  SUBCASE("same seed, same codebook; different seeds usually differ") {
    const RasterImage big = oracle::random_image(rng, 64, 64);
    CHECK(init_random(big, 8, 99) == init_random(big, 8, 99));
    int differ = 0;
    for (std::uint64_t s = 0; s < 100; ++s) differ += init_random(big, 8, s) != init_random(big, 8, s + 1000);
    CHECK(differ >= 99);
  }
  CHECK_THROWS_AS(init_random(img, 13, 1), Error);
}

TEST_CASE("deductive init") {
  const auto& dict = ColorDictionary::default_dictionary();
  SUBCASE("three populated categories give three class means") {
    std::mt19937_64 rng(79);
    const std::vector<Rgb> colors = {{200, 40, 60}, {210, 30, 50}, {0, 0, 0}, {255, 255, 255}};
    const RasterImage img = palette_image(rng, 30, 20, colors);
    const ColorMap fine = quantize_image(img, dict);
    const Codebook cb = init_deductive(img, fine);
    CHECK(cb.k() == 3);
    // Oracle: grouped average over fine codes, ordered by code.
    std::vector<std::uint32_t> ids(fine.codes.begin(), fine.codes.end());
    const auto means = oracle::grouped_average(ids, img);
    std::size_t j = 0;
    for (const auto& [code, mean] : means) {
      for (int b = 0; b < 3; ++b) CHECK(cb.centroids[j][b] == doctest::Approx(mean[b]).epsilon(1e-12));
      ++j;
    }
  }
  SUBCASE("constant image gives k = 1") {
    RasterImage img(5, 5);
    for (std::size_t i = 0; i < 25; ++i) img.set_pixel(i, {1, 2, 3});
    CHECK(init_deductive(img, quantize_image(img, dict)).k() == 1);
  }
  SUBCASE("centroids lie inside their class bounding boxes") {
    std::mt19937_64 rng(83);
    const RasterImage img = oracle::random_image(rng, 40, 40);
    const ColorMap fine = quantize_image(img, dict);
    const Codebook cb = init_deductive(img, fine);
    std::size_t j = 0;
    for (std::uint8_t code = 0; code < kFineUnknown; ++code) {
      std::array<int, 3> lo{255, 255, 255}, hi{0, 0, 0};
      bool any = false;
      for (std::size_t i = 0; i < img.pixel_count(); ++i)
        if (fine.codes[i] == code) {
          any = true;
          for (int b = 0; b < 3; ++b) {
            lo[b] = std::min<int>(lo[b], img.pixel(i)[b]);
            hi[b] = std::max<int>(hi[b], img.pixel(i)[b]);
          }
        }
      if (!any) continue;
      for (int b = 0; b < 3; ++b) {
        CHECK(cb.centroids[j][b] >= lo[b]);
        CHECK(cb.centroids[j][b] <= hi[b]);
      }
      ++j;
    }
    CHECK(j == cb.k());
  }
}

TEST_CASE("apply_codebook tie and single-centroid rules") {
  Codebook one{{{5, 5, 5}}};
  RasterImage img(3, 1, {0, 0, 0, 100, 100, 100, 255, 0, 9});
  const ColorMap a = apply_codebook(img, one);
  CHECK(std::all_of(a.codes.begin(), a.codes.end(), [](auto c) { return c == 0; }));

  Codebook cb{{{0, 0, 0}, {0, 0, 0}, {10, 0, 0}, {50, 50, 50}, {90, 90, 90}, {30, 0, 0}}};
  RasterImage px(1, 1, {20, 0, 0});  // 10 away from centroids 2 and 5
  CHECK(apply_codebook(px, cb).codes[0] == 2);
  CHECK_THROWS_AS(apply_codebook(px, Codebook{}), Error);
}

TEST_CASE("k-means properties") {
  SUBCASE("fixed point at the true colors") {
    std::mt19937_64 rng(89);
    const std::vector<Rgb> colors = {{10, 20, 30}, {200, 0, 0}, {0, 200, 0}, {90, 90, 250}};
    const RasterImage img = palette_image(rng, 32, 32, colors);
    Codebook init;
    for (const auto& c : colors) init.centroids.push_back({double(c[0]), double(c[1]), double(c[2])});
    KMeansConfig cfg;
    cfg.k = 4;
    const KMeansResult r = kmeans_run(img, cfg, init);
    CHECK(r.sse_trace.back() == 0.0);
    CHECK(r.changed_trace.front() == 0);
    CHECK(r.iterations_used == 1);
    CHECK(r.codebook == init);
  }
  SUBCASE("k = 1 converges to the global mean in one update") {
    std::mt19937_64 rng(97);
    const RasterImage img = oracle::random_image(rng, 20, 10);
    KMeansConfig cfg;
    cfg.k = 1;
    const KMeansResult r = kmeans_run(img, cfg);
    CHECK(r.iterations_used == 1);
    std::array<double, 3> mean{};
    for (std::size_t i = 0; i < 200; ++i)
      for (int b = 0; b < 3; ++b) mean[b] += img.pixel(i)[b] / 200.0;
    for (int b = 0; b < 3; ++b) CHECK(r.codebook.centroids[0][b] == doctest::Approx(mean[b]).epsilon(1e-12));
  }
  SUBCASE("SSE is non-increasing and centroids are exact means") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 20; ++t) {
      const RasterImage img = oracle::random_image(rng, 16 + rng() % 16, 16 + rng() % 16);
      KMeansConfig cfg;
      cfg.k = 2 + rng() % 10;
      cfg.max_iterations = 6;
      cfg.change_threshold = 0.001;
      cfg.seed = rng();
      const KMeansResult r = kmeans_run(img, cfg);
      for (std::size_t i = 1; i < r.sse_trace.size(); ++i) CHECK(r.sse_trace[i] <= r.sse_trace[i - 1]);
      const Codebook next = update_centroids(img, r.assignment, r.codebook);
      std::vector<std::uint32_t> ids(r.assignment.codes.begin(), r.assignment.codes.end());
      for (const auto& [c, mean] : oracle::grouped_average(ids, img))
        for (int b = 0; b < 3; ++b) CHECK(next.centroids[c][b] == doctest::Approx(mean[b]).epsilon(1e-9));
    }
  }
  SUBCASE("apply_codebook reproduces the final assignment") {
    std::mt19937_64 rng(103);
    const RasterImage img = oracle::random_image(rng, 30, 30);
    KMeansConfig cfg;
    cfg.k = 7;
    const KMeansResult r = kmeans_run(img, cfg);
    CHECK(apply_codebook(img, r.codebook) == r.assignment);
  }
  SUBCASE("thread count does not change results") {
    std::mt19937_64 rng(107);
    const RasterImage img = oracle::random_image(rng, 70, 600);
    KMeansConfig cfg;
    cfg.k = 9;
    cfg.seed = 4;
    cfg.tile_height = 64;
    const KMeansResult a = kmeans_run(img, cfg);
    cfg.threads = std::max<std::size_t>(4, max_threads());
    const KMeansResult b = kmeans_run(img, cfg);
    CHECK(a.codebook == b.codebook);
    CHECK(a.assignment == b.assignment);
    CHECK(a.sse_trace == b.sse_trace);
  }
  SUBCASE("deductive mode needs a fine map") {
    KMeansConfig cfg;
    cfg.init = InitMode::Deductive;
    CHECK_THROWS_AS(kmeans_run(RasterImage(8, 8), cfg), Error);
  }
}

TEST_CASE("k-means config validation") {
  KMeansConfig c;
  CHECK_NOTHROW(c.validate());
  c.k = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c.k = 257;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.change_threshold = 1.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.max_iterations = 0;
  CHECK_THROWS_AS(c.validate(), Error);
}
