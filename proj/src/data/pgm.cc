// Copyright 2026 The latentdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "latentdp/data/pgm.h"

#include <cctype>
#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"
#include "latentdp/base/binary_io.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {
namespace {

class HeaderScanner {
 public:
  explicit HeaderScanner(absl::string_view bytes) : bytes_(bytes) {}

  // Skips whitespace and comments, then reads a decimal field.
  absl::StatusOr<int> NextInt(absl::string_view what) {
    SkipSpaceAndComments();
    size_t start = pos_;
    int64_t value = 0;
    while (pos_ < bytes_.size() &&
           std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > (1 << 24)) {
        return absl::InvalidArgumentError(
            absl::StrCat("pgm ", what, " too large"));
      }
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= bytes_.size()) {
        return absl::DataLossError(
            absl::StrCat("truncated pgm header: missing ", what));
      }
      return absl::InvalidArgumentError(
          absl::StrCat("malformed pgm header: expected ", what));
    }
    return static_cast<int>(value);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  absl::Status EndOfHeader() {
    if (pos_ >= bytes_.size()) {
      return absl::DataLossError("truncated pgm: no pixel data");
    }
    if (!std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      return absl::InvalidArgumentError("malformed pgm header after maxval");
    }
    ++pos_;
    return absl::OkStatus();
  }

  size_t pos() const { return pos_; }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  absl::string_view bytes_;
  size_t pos_ = 2;
};

}  // namespace

std::string EncodePgm(const Image& image) {
  std::string out =
      absl::StrCat("P5\n", image.width(), " ", image.height(), "\n255\n");
  out.reserve(out.size() + image.size());
  for (double p : image.pixels()) {
    out.push_back(static_cast<char>(
        static_cast<unsigned char>(std::lround(p * 255.0))));
  }
  return out;
}

absl::StatusOr<Image> DecodePgm(absl::string_view bytes) {
  if (bytes.size() < 2 || bytes.substr(0, 2) != "P5") {
    return absl::InvalidArgumentError(absl::StrCat(
        "bad magic: expected P5, got '", bytes.substr(0, 2), "'"));
  }
  HeaderScanner scan(bytes);
  ASSIGN_OR_RETURN(int width, scan.NextInt("width"));
  ASSIGN_OR_RETURN(int height, scan.NextInt("height"));
  ASSIGN_OR_RETURN(int maxval, scan.NextInt("maxval"));
  if (width <= 0 || height <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("pgm dimensions must be positive: ", width, "x", height));
  }
  if (maxval != 255) {
    return absl::UnimplementedError(
        absl::StrCat("bad maxval: only 255 is supported, got ", maxval));
  }
  RETURN_IF_ERROR(scan.EndOfHeader());
  const size_t need = static_cast<size_t>(width) * static_cast<size_t>(height);
  const size_t have = bytes.size() - scan.pos();
  if (have < need) {
    return absl::DataLossError(absl::StrCat("truncated pgm: expected ", need,
                                            " pixel bytes, got ", have));
  }
  std::vector<double> pixels(need);
  for (size_t i = 0; i < need; ++i) {
    pixels[i] = static_cast<unsigned char>(bytes[scan.pos() + i]) / 255.0;
  }
  return Image::Create(width, height, std::move(pixels));
}

absl::Status WritePgm(const Image& image, const std::string& path) {
  return WriteFileBytes(path, EncodePgm(image));
}

absl::StatusOr<Image> ReadPgm(const std::string& path) {
  ASSIGN_OR_RETURN(std::string bytes, ReadFileBytes(path));
  auto image = DecodePgm(bytes);
  if (!image.ok()) {
    return absl::Status(image.status().code(),
                        absl::StrCat(path, ": ", image.status().message()));
  }
  return image;
}

}  // namespace latentdp
