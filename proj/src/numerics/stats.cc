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
#include "latentdp/numerics/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace latentdp {

int64_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), int64_t{0}) +
         underflow + overflow;
}

absl::StatusOr<Histogram> MakeHistogram(std::span<const double> values,
                                        std::span<const double> edges) {
  if (edges.size() < 2) {
    return absl::InvalidArgumentError("histogram needs at least two edges");
  }
  for (size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) {
      return absl::InvalidArgumentError(
          "histogram edges must be strictly increasing");
    }
  }
  Histogram h;
  h.edges.assign(edges.begin(), edges.end());
  h.counts.assign(edges.size() - 1, 0);
  for (double v : values) {
    if (v < edges.front()) {
      ++h.underflow;
    } else if (v > edges.back()) {
      ++h.overflow;
    } else if (v == edges.back()) {
      ++h.counts.back();
    } else {
      auto it = std::upper_bound(edges.begin(), edges.end(), v);
      ++h.counts[static_cast<size_t>(it - edges.begin()) - 1];
    }
  }
  return h;
}

absl::StatusOr<DescriptiveStats> Describe(std::span<const double> values,
                                          std::span<const double> edges) {
  if (values.empty()) {
    return absl::InvalidArgumentError("descriptive stats of an empty list");
  }
  DescriptiveStats s;
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  auto hist = MakeHistogram(values, edges);
  if (!hist.ok()) return hist.status();
  s.histogram = *std::move(hist);
  return s;
}

std::vector<double> UniformEdges(double lo, double hi, int bins) {
  std::vector<double> edges(static_cast<size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) {
    edges[static_cast<size_t>(i)] = lo + (hi - lo) * i / bins;
  }
  edges.back() = hi;
  return edges;
}

absl::StatusOr<double> NearestRankPercentile(std::span<const double> values,
                                             double percentile) {
  if (values.empty()) {
    return absl::InvalidArgumentError("percentile of an empty list");
  }
  if (!(percentile >= 0.0 && percentile <= 100.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("percentile must be in [0, 100], got ", percentile));
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  // Guard against p/100*n landing a hair above an integer.
  const double rank = std::ceil(percentile / 100.0 * n - 1e-9);
  const size_t index = rank < 1.0 ? 0 : static_cast<size_t>(rank) - 1;
  return sorted[std::min(index, sorted.size() - 1)];
}

}  // namespace latentdp
