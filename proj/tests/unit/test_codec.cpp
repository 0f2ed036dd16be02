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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qnq/colormap_codec.hpp"
#include "qnq/error.hpp"

using namespace qnq;

namespace {
ErrorKind kind_of(const std::vector<std::uint8_t>& bytes) {
  try {
    unpack_colormap(bytes);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Usage;
}
}  // namespace

TEST_CASE("packed header and single-pixel payload") {
  ColorMap m(1, 1, 50);
  const auto bytes = pack_colormap(m);
  REQUIRE(bytes.size() == kPackedHeaderBytes + 1);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "QNQ1");
  CHECK(bytes[4] == 1);
  CHECK(bytes[8] == 1);
  CHECK(bytes[12] == 6);
  CHECK(bytes[13] == 0x00);
}

TEST_CASE("MSB-first bit order") {
  ColorMap m(2, 1, 12);
  m.codes = {0xA, 0x3};
  const auto bytes = pack_colormap(m);
  CHECK(bytes.back() == 0xA3);
  ColorMap f(2, 1, 50);
  f.codes = {1, 2};  // 000001 000010 -> 00000100 0010(0000)
  const auto fb = pack_colormap(f);
  REQUIRE(fb.size() == kPackedHeaderBytes + 2);
  CHECK(fb[13] == 0x04);
  CHECK(fb[14] == 0x20);
}

TEST_CASE("payload size formula and round trip") {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 100; ++t) {
    const std::size_t w = 1 + rng() % 33, h = 1 + rng() % 33;
    const std::size_t levels = t % 2 ? 50 : 12;
    const ColorMap m = oracle::random_map(rng, w, h, levels);
    const auto bytes = pack_colormap(m);
    const std::size_t bits = levels == 50 ? 6 : 4;
    CHECK(bytes.size() == kPackedHeaderBytes + (w * h * bits + 7) / 8);
    CHECK(unpack_colormap(bytes) == m);
  }
}

TEST_CASE("unpack rejects damaged streams") {
  ColorMap m(5, 3, 50);
  m.codes[7] = 49;
  const auto good = pack_colormap(m);
  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK(kind_of(bad_magic) == ErrorKind::Format);
  auto truncated = good;
  truncated.pop_back();
  CHECK(kind_of(truncated) == ErrorKind::Format);
  CHECK(kind_of({'Q', 'N', 'Q'}) == ErrorKind::Format);
  auto bits = good;
  bits[12] = 5;
  CHECK(kind_of(bits) == ErrorKind::Format);
  auto out_of_range = good;
  out_of_range[13] = 0xFC;  // first code 63
  CHECK(kind_of(out_of_range) == ErrorKind::Format);
  auto trailing = good;
  trailing.push_back(0);
  CHECK(kind_of(trailing) == ErrorKind::Format);
}

TEST_CASE("packing needs 12 or 50 levels") {
  CHECK_THROWS_AS(pack_colormap(ColorMap(2, 2, 49)), Error);
  ColorMap m(1, 1, 12);
  m.codes[0] = 16;
  CHECK_THROWS_AS(pack_colormap(m), Error);
}

TEST_CASE("segmentation raw round trip") {
  std::mt19937_64 rng(131);
  const ColorMap m = oracle::blobby_map(rng, 19, 7, 3);
  const LabelMap l = label_components(m);
  const auto bytes = encode_segmentation(l);
  CHECK(bytes.size() == kSegHeaderBytes + 4 * 19 * 7);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "SEG1");
  CHECK(decode_segmentation(bytes) == l);
  auto cut = bytes;
  cut.pop_back();
  CHECK_THROWS_AS(decode_segmentation(cut), Error);
}

TEST_CASE("pseudocolor rendering") {
  ColorMap m(2, 1, 3);
  m.codes = {0, 2};
  const std::vector<Rgb> pal = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const RasterImage img = render_pseudocolor(m, pal);
  CHECK(img.pixel(1) == Rgb{7, 8, 9});
  m.codes[0] = 3;
  CHECK_THROWS_AS(render_pseudocolor(m, pal), Error);
}
