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

#ifndef LATENTDP_NUMERICS_STATS_H_
#define LATENTDP_NUMERICS_STATS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace latentdp {

// Bins are [edges[i], edges[i+1]); the last bin also takes its right edge.
// Values outside the edges land in `underflow` / `overflow`, so the counts
// always partition the input.
struct Histogram {
  std::vector<double> edges;
  std::vector<int64_t> counts;
  int64_t underflow = 0;
  int64_t overflow = 0;

  int64_t total() const;
};

struct DescriptiveStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  Histogram histogram;
};

absl::StatusOr<Histogram> MakeHistogram(std::span<const double> values,
                                        std::span<const double> edges);

absl::StatusOr<DescriptiveStats> Describe(std::span<const double> values,
                                          std::span<const double> edges);

// `bins` + 1 equally spaced edges spanning [lo, hi].
std::vector<double> UniformEdges(double lo, double hi, int bins);

// Nearest-rank percentile: the ceil(p/100 * n)-th smallest value (1-based),
// with p = 0 mapping to the minimum.
absl::StatusOr<double> NearestRankPercentile(std::span<const double> values,
                                             double percentile);

}  // namespace latentdp

#endif  // LATENTDP_NUMERICS_STATS_H_
