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
#include "latentdp/codec/image.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace latentdp {

absl::StatusOr<Image> Image::Create(int width, int height,
                                    std::vector<double> pixels) {
  if (width < 1 || height < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("image dimensions must be positive, got ", width, "x",
                     height));
  }
  if (pixels.size() != static_cast<size_t>(width) * static_cast<size_t>(height)) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", width * height, " pixels, got ",
                     pixels.size()));
  }
  for (size_t i = 0; i < pixels.size(); ++i) {
    if (!(pixels[i] >= 0.0 && pixels[i] <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("pixel ", i, " out of [0,1]: ", pixels[i]));
    }
  }
  return Image(width, height, std::move(pixels));
}

Image Image::FromClamped(int width, int height, std::vector<double> pixels) {
  for (double& p : pixels) p = std::isnan(p) ? 0.0 : std::clamp(p, 0.0, 1.0);
  return Image(width, height, std::move(pixels));
}

Image Image::Filled(int width, int height, double value) {
  return FromClamped(
      width, height,
      std::vector<double>(static_cast<size_t>(width) * static_cast<size_t>(height),
                          value));
}

}  // namespace latentdp
