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
#include "latentdp/metrics/ssim.h"

#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"

namespace latentdp {

absl::StatusOr<double> Ssim(const Image& x, const Image& y,
                            const SsimOptions& options) {
  if (x.width() != y.width() || x.height() != y.height()) {
    return absl::InvalidArgumentError("ssim inputs differ in shape");
  }
  const int win = options.window;
  if (win < 1 || !(options.sigma > 0.0)) {
    return absl::InvalidArgumentError("ssim window must be >= 1, sigma > 0");
  }
  if (x.width() < win || x.height() < win) {
    return absl::InvalidArgumentError(absl::StrCat(
        "image ", x.width(), "x", x.height(), " smaller than ssim window ",
        win));
  }
  // Separable 2-D Gaussian, normalized to sum 1.
  std::vector<double> g(static_cast<size_t>(win));
  const double center = (win - 1) / 2.0;
  double gsum = 0.0;
  for (int i = 0; i < win; ++i) {
    const double d = i - center;
    g[i] = std::exp(-d * d / (2.0 * options.sigma * options.sigma));
    gsum += g[i];
  }
  for (double& v : g) v /= gsum;

  const double c1 = std::pow(options.k1 * options.dynamic_range, 2);
  const double c2 = std::pow(options.k2 * options.dynamic_range, 2);
  const int nx = x.width() - win + 1;
  const int ny = x.height() - win + 1;
  double total = 0.0;
  for (int oy = 0; oy < ny; ++oy) {
    for (int ox = 0; ox < nx; ++ox) {
      double mx = 0.0, my = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
      for (int j = 0; j < win; ++j) {
        for (int i = 0; i < win; ++i) {
          const double w = g[i] * g[j];
          const double a = x.at(ox + i, oy + j);
          const double b = y.at(ox + i, oy + j);
          mx += w * a;
          my += w * b;
          sxx += w * a * a;
          syy += w * b * b;
          sxy += w * (a * b);
        }
      }
      const double vx = sxx - mx * mx;
      const double vy = syy - my * my;
      const double cxy = sxy - mx * my;
      total += ((2.0 * mx * my + c1) * (2.0 * cxy + c2)) /
               ((mx * mx + my * my + c1) * (vx + vy + c2));
    }
  }
  return total / (static_cast<double>(nx) * ny);
}

}  // namespace latentdp
