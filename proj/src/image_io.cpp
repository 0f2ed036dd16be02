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

#include "qnq/image_io.hpp"

#include <png.h>

#include <cstring>
#include <fstream>
#include <iterator>

#include "qnq/error.hpp"

namespace qnq {

namespace fs = std::filesystem;

std::vector<std::uint8_t> read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorKind::Io, "read failed: " + path.string());
  return bytes;
}

void write_file_bytes(const fs::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorKind::Io, "write failed: " + path.string());
}

void write_text_file(const fs::path& path, const std::string& text) {
  write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                   text.size()));
}

// ---------------------------------------------------------------------------
// PPM (P6, maxval 255)

namespace {

class PpmHeaderReader {
 public:
  explicit PpmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t next_number() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !is_digit(bytes_[pos_]))
      fail(ErrorKind::Format, "PPM header: expected a number");
    std::size_t value = 0;
    while (pos_ < bytes_.size() && is_digit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_++] - '0');
      if (value > (1u << 30)) fail(ErrorKind::Format, "PPM header: number too large");
    }
    return value;
  }

  /// Consumes the single whitespace byte that ends the header.
  std::size_t payload_offset() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_]))
      fail(ErrorKind::Format, "PPM header: missing separator before raster");
    return pos_ + 1;
  }

 private:
  static bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }
  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;  // past "P6"
};

}  // namespace

RasterImage decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
    fail(ErrorKind::Format, "not a binary PPM (P6)");
  PpmHeaderReader header(bytes);
  const std::size_t width = header.next_number();
  const std::size_t height = header.next_number();
  const std::size_t maxval = header.next_number();
  if (width == 0 || height == 0) fail(ErrorKind::Format, "PPM has zero dimension");
  if (maxval != 255) fail(ErrorKind::Format, "only 8-bit PPM (maxval 255) is supported");
  const std::size_t offset = header.payload_offset();
  const std::size_t need = width * height * kBands;
  if (bytes.size() - offset < need) fail(ErrorKind::Format, "PPM raster truncated");
  std::vector<std::uint8_t> samples(bytes.begin() + offset,
                                    bytes.begin() + offset + need);
  return RasterImage(width, height, std::move(samples));
}

std::vector<std::uint8_t> encode_ppm(const RasterImage& image) {
  const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.samples().begin(), image.samples().end());
  return out;
}

void write_ppm(const fs::path& path, const RasterImage& image) {
  write_file_bytes(path, encode_ppm(image));
}

// ---------------------------------------------------------------------------
// PNG through libpng's simplified API

namespace {

struct PngImage {
  png_image image;
  PngImage() {
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;
};

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
  PngImage png;
  if (!png_image_begin_read_from_memory(&png.image, bytes.data(), bytes.size()))
    fail(ErrorKind::Format, std::string("PNG decode: ") + png.image.message);
  const auto format = png.image.format;
  if ((format & PNG_FORMAT_FLAG_COLOR) == 0 || (format & PNG_FORMAT_FLAG_ALPHA) != 0 ||
      (format & PNG_FORMAT_FLAG_COLORMAP) != 0 || (format & PNG_FORMAT_FLAG_LINEAR) != 0)
    fail(ErrorKind::Format, "PNG must be 8-bit RGB without alpha or palette");
  png.image.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> samples(PNG_IMAGE_SIZE(png.image));
  if (!png_image_finish_read(&png.image, nullptr, samples.data(), 0, nullptr))
    fail(ErrorKind::Format, std::string("PNG decode: ") + png.image.message);
  return RasterImage(png.image.width, png.image.height, std::move(samples));
}

void encode_png(const fs::path& path, std::size_t width, std::size_t height,
                std::uint32_t format, const std::uint8_t* data) {
  PngImage png;
  png.image.width = static_cast<png_uint_32>(width);
  png.image.height = static_cast<png_uint_32>(height);
  png.image.format = format;
  if (!png_image_write_to_file(&png.image, path.c_str(), 0, data, 0, nullptr))
    fail(ErrorKind::Io, "PNG write " + path.string() + ": " + png.image.message);
}

}  // namespace

RasterImage read_image(const fs::path& path) {
  const auto bytes = read_file_bytes(path);
  static constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0)
    return decode_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') return decode_ppm(bytes);
  fail(ErrorKind::Format, "unrecognized image format: " + path.string());
}

void write_png(const fs::path& path, const RasterImage& image) {
  encode_png(path, image.width(), image.height(), PNG_FORMAT_RGB, image.samples().data());
}

void write_gray_png(const fs::path& path, std::size_t width, std::size_t height,
                    std::span<const std::uint8_t> values) {
  if (values.size() != width * height)
    fail(ErrorKind::Usage, "gray PNG value count does not match dimensions");
  encode_png(path, width, height, PNG_FORMAT_GRAY, values.data());
}

void write_image(const fs::path& path, const RasterImage& image) {
  if (path.extension() == ".ppm")
    write_ppm(path, image);
  else
    write_png(path, image);
}

}  // namespace qnq
