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

#ifndef QNQ_IMAGE_IO_HPP
#define QNQ_IMAGE_IO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qnq/raster.hpp"

namespace qnq {

// Only 8-bit, 3-band rasters are accepted. PNG files with alpha, palette or
// other bit depths are rejected with a Format error rather than converted.

RasterImage read_image(const std::filesystem::path& path);

RasterImage decode_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const RasterImage& image);

void write_ppm(const std::filesystem::path& path, const RasterImage& image);
void write_png(const std::filesystem::path& path, const RasterImage& image);

/// Single-band 8-bit PNG from `values` (width * height entries).
void write_gray_png(const std::filesystem::path& path, std::size_t width,
                    std::size_t height, std::span<const std::uint8_t> values);

/// Format chosen by extension: ".ppm" writes P6, anything else PNG.
void write_image(const std::filesystem::path& path, const RasterImage& image);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qnq

#endif  // QNQ_IMAGE_IO_HPP
