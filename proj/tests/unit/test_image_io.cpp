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

#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qnq/error.hpp"
#include "qnq/image_io.hpp"

using namespace qnq;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qnq_unit_io";
  fs::create_directories(dir);
  return dir / name;
}
}  // namespace

TEST_CASE("PNG and PPM round trip") {
  std::mt19937_64 rng(11);
  const RasterImage img = oracle::random_image(rng, 17, 9);
  write_image(scratch("a.png"), img);
  write_image(scratch("a.ppm"), img);
  CHECK(read_image(scratch("a.png")) == img);
  CHECK(read_image(scratch("a.ppm")) == img);
  CHECK(decode_ppm(encode_ppm(img)) == img);
}

TEST_CASE("malformed and missing inputs map to their error classes") {
  try {
    read_image(scratch("does_not_exist.png"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
  const std::vector<std::uint8_t> junk = {'h', 'e', 'l', 'l', 'o'};
  write_file_bytes(scratch("junk.png"), junk);
  try {
    read_image(scratch("junk.png"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Format);
  }
  std::vector<std::uint8_t> trunc = encode_ppm(RasterImage(4, 4));
  trunc.resize(trunc.size() - 3);
  try {
    decode_ppm(trunc);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Format);
  }
}

TEST_CASE("gray PNG rejected as input") {
  write_gray_png(scratch("g.png"), 3, 2, std::vector<std::uint8_t>(6, 9));
  CHECK_THROWS_AS(read_image(scratch("g.png")), Error);
}
