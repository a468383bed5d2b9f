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

// Feature-space sensitivity: the largest l1 distance between the latent
// codes of two images.
//
// Two ways to obtain it:
//  * EstimateSensitivity measures the maximum over a corpus. The value is
//    only an empirical figure for that corpus and encoder; an unseen image
//    can exceed it, so it does not bound the worst case.
//  * ClipLatent projects codes into the l1 ball of radius B, after which
//    2B is a provable sensitivity for any input.

#ifndef LATENTDP_PRIVACY_SENSITIVITY_H_
#define LATENTDP_PRIVACY_SENSITIVITY_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "latentdp/codec/image.h"
#include "latentdp/numerics/stats.h"

namespace latentdp {

struct SensitivityReport {
  double delta_f = 0.0;
  int count = 0;
  // Pair attaining delta_f (first in row-major scan order).
  std::pair<int, int> argmax = {0, 0};
  // count x count, row-major, symmetric with a zero diagonal.
  std::vector<double> distances;
  // Over the count*(count-1)/2 unordered pairs; histogram spans [0, max].
  DescriptiveStats stats;

  double distance(int i, int j) const {
    return distances[static_cast<size_t>(i) * static_cast<size_t>(count) +
                     static_cast<size_t>(j)];
  }
};

double L1Distance(std::span<const double> a, std::span<const double> b);
double L1Norm(std::span<const double> a);

absl::StatusOr<SensitivityReport> EstimateSensitivity(
    std::span<const LatentVector> latents, int histogram_bins = 50);

// CSV `bin_low,bin_high,count`.
absl::Status WriteHistogramCsv(const SensitivityReport& report,
                               const std::string& path);
// CSV `i,j,distance` over the first `limit` latents, all ordered pairs.
absl::Status WriteHeatmapCsv(const SensitivityReport& report,
                             const std::string& path, int limit = 20);

// Scales z into the l1 ball of the given radius; codes already inside are
// returned unchanged.
absl::StatusOr<LatentVector> ClipLatent(const LatentVector& z, double radius);

}  // namespace latentdp

#endif  // LATENTDP_PRIVACY_SENSITIVITY_H_
