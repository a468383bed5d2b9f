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
#include "latentdp/numerics/sampling.h"

#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace latentdp {

absl::StatusOr<double> GaussianSample(RngStream& stream, double mean,
                                      double std) {
  if (!(std >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("gaussian std must be >= 0, got ", std));
  }
  // Shift to (0, 1] so the log is finite.
  const double u1 = stream.UniformOpen() + 0.5;
  const double u2 = stream.UniformOpen() + 0.5;
  if (std == 0.0) return mean;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return mean + std * radius * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace latentdp
