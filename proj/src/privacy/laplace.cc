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
#include "latentdp/privacy/laplace.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace latentdp {

double LaplaceFromUniform(double u, double scale) {
  if (scale == 0.0 || u == 0.0) return 0.0;
  const double tail = std::max(1.0 - 2.0 * std::abs(u), 0x1.0p-53);
  return -scale * (u > 0.0 ? 1.0 : -1.0) * std::log(tail);
}

absl::StatusOr<double> LaplaceSample(RngStream& stream, double scale) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat("laplace scale must be finite and >= 0, got ", scale));
  }
  return LaplaceFromUniform(stream.UniformOpen(), scale);
}

double LaplaceCdf(double x, double scale) {
  if (scale == 0.0) return x < 0.0 ? 0.0 : 1.0;
  if (x < 0.0) return 0.5 * std::exp(x / scale);
  return 1.0 - 0.5 * std::exp(-x / scale);
}

}  // namespace latentdp
