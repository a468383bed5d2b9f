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
#include "latentdp/metrics/distortion.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace latentdp {
namespace {

absl::Status SameShape(const Image& x, const Image& y) {
  if (x.width() != y.width() || x.height() != y.height()) {
    return absl::InvalidArgumentError(
        absl::StrCat("image shapes differ: ", x.width(), "x", x.height(),
                     " vs ", y.width(), "x", y.height()));
  }
  return absl::OkStatus();
}

template <typename F>
double Norm(NormOrder order, size_t n, F value) {
  if (order.is_infinity()) {
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::abs(value(i)));
    return m;
  }
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += std::pow(std::abs(value(i)), order.p());
  return std::pow(s, 1.0 / order.p());
}

}  // namespace

absl::StatusOr<NormOrder> NormOrder::Of(int p) {
  if (p < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("norm order must be a positive integer, got ", p));
  }
  return NormOrder(p);
}

absl::StatusOr<double> L2Distance(const Image& x, const Image& y) {
  if (auto s = SameShape(x, y); !s.ok()) return s;
  double sum = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double d = y.pixels()[i] - x.pixels()[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

absl::StatusOr<double> AverageLpDistortion(const Image& x, const Image& y,
                                           NormOrder order) {
  if (auto s = SameShape(x, y); !s.ok()) return s;
  const auto xp = x.pixels();
  const auto yp = y.pixels();
  const double denom = Norm(order, xp.size(), [&](size_t i) { return xp[i]; });
  if (denom == 0.0) {
    return absl::InvalidArgumentError("ALD of an all-zero reference image");
  }
  return Norm(order, xp.size(), [&](size_t i) { return yp[i] - xp[i]; }) /
         denom;
}

}  // namespace latentdp
