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
#include "latentdp/metrics/baselines.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"

namespace latentdp {

int BlurRadiusFor(double sigma) {
  if (!(sigma > 0.0)) return 0;
  return static_cast<int>(std::ceil(3.0 * sigma));
}

absl::StatusOr<Image> GaussianBlur(const Image& x, double sigma, int radius) {
  if (radius < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("blur radius must be >= 0, got ", radius));
  }
  if (radius == 0) return x;
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    return absl::InvalidArgumentError(
        absl::StrCat("blur sigma must be positive, got ", sigma));
  }
  std::vector<double> kernel(static_cast<size_t>(2 * radius + 1));
  double total = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    const double w = std::exp(-(k * k) / (2.0 * sigma * sigma));
    kernel[static_cast<size_t>(k + radius)] = w;
    total += w;
  }
  for (double& w : kernel) w /= total;

  const int width = x.width();
  const int height = x.height();
  auto idx = [width](int c, int r) {
    return static_cast<size_t>(r) * static_cast<size_t>(width) +
           static_cast<size_t>(c);
  };
  std::vector<double> rows(x.size());
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        const int cc = std::clamp(c + k, 0, width - 1);
        acc += kernel[static_cast<size_t>(k + radius)] * x.at(cc, r);
      }
      rows[idx(c, r)] = acc;
    }
  }
  std::vector<double> out(x.size());
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        const int rr = std::clamp(r + k, 0, height - 1);
        acc += kernel[static_cast<size_t>(k + radius)] * rows[idx(c, rr)];
      }
      out[idx(c, r)] = acc;
    }
  }
  // Convex combinations of [0, 1] values; clamping only absorbs rounding.
  return Image::FromClamped(width, height, std::move(out));
}

absl::StatusOr<Image> Mosaic(const Image& x, int block) {
  if (block < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("mosaic block must be >= 1, got ", block));
  }
  if (block == 1) return x;
  const int width = x.width();
  const int height = x.height();
  std::vector<double> out(x.size());
  for (int r0 = 0; r0 < height; r0 += block) {
    for (int c0 = 0; c0 < width; c0 += block) {
      const int r1 = std::min(r0 + block, height);
      const int c1 = std::min(c0 + block, width);
      double sum = 0.0;
      for (int r = r0; r < r1; ++r) {
        for (int c = c0; c < c1; ++c) sum += x.at(c, r);
      }
      const double mean = sum / static_cast<double>((r1 - r0) * (c1 - c0));
      for (int r = r0; r < r1; ++r) {
        for (int c = c0; c < c1; ++c) {
          out[static_cast<size_t>(r) * static_cast<size_t>(width) +
              static_cast<size_t>(c)] = mean;
        }
      }
    }
  }
  return Image::FromClamped(width, height, std::move(out));
}

}  // namespace latentdp
