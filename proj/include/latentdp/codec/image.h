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

#ifndef LATENTDP_CODEC_IMAGE_H_
#define LATENTDP_CODEC_IMAGE_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace latentdp {

// Grayscale raster, row-major, every pixel in [0, 1].
class Image {
 public:
  // Empty 0 x 0 image, only useful as a placeholder to assign into.
  Image() = default;

  // Rejects non-positive dimensions, a pixel count that does not match, and
  // pixels outside [0, 1] (including NaN).
  static absl::StatusOr<Image> Create(int width, int height,
                                      std::vector<double> pixels);
  // Clamps every pixel into [0, 1]; NaN becomes 0.
  static Image FromClamped(int width, int height, std::vector<double> pixels);
  static Image Filled(int width, int height, double value);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return pixels_.size(); }
  double at(int x, int y) const {
    return pixels_[static_cast<size_t>(y) * static_cast<size_t>(width_) +
                   static_cast<size_t>(x)];
  }
  std::span<const double> pixels() const { return pixels_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  Image(int width, int height, std::vector<double> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {}

  int width_ = 0;
  int height_ = 0;
  std::vector<double> pixels_;
};

// The feature-space point an encoder assigns to an image. The first
// `identity_len` coordinates form the identity block.
struct LatentVector {
  std::vector<double> values;
  int identity_len = 0;

  size_t size() const { return values.size(); }
  std::span<const double> identity_block() const {
    return std::span<const double>(values).first(
        static_cast<size_t>(identity_len));
  }

  friend bool operator==(const LatentVector&, const LatentVector&) = default;
};

}  // namespace latentdp

#endif  // LATENTDP_CODEC_IMAGE_H_
