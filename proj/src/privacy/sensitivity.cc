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
#include "latentdp/privacy/sensitivity.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "latentdp/base/csv.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {

double L1Distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double L1Norm(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += std::abs(v);
  return s;
}

absl::StatusOr<SensitivityReport> EstimateSensitivity(
    std::span<const LatentVector> latents, int histogram_bins) {
  if (latents.size() < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("sensitivity needs at least 2 latents, got ",
                     latents.size()));
  }
  if (histogram_bins < 1) {
    return absl::InvalidArgumentError("histogram_bins must be >= 1");
  }
  const size_t m = latents.front().size();
  for (const LatentVector& z : latents) {
    if (z.size() != m) {
      return absl::InvalidArgumentError(absl::StrCat(
          "latents have mixed lengths ", m, " and ", z.size()));
    }
  }
  SensitivityReport report;
  report.count = static_cast<int>(latents.size());
  const size_t n = latents.size();
  report.distances.assign(n * n, 0.0);
  std::vector<double> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double d = L1Distance(latents[i].values, latents[j].values);
      report.distances[i * n + j] = d;
      report.distances[j * n + i] = d;
      pairs.push_back(d);
      if (d > report.delta_f) {
        report.delta_f = d;
        report.argmax = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  const double hi = report.delta_f > 0.0 ? report.delta_f : 1.0;
  ASSIGN_OR_RETURN(report.stats,
                   Describe(pairs, UniformEdges(0.0, hi, histogram_bins)));
  return report;
}

absl::Status WriteHistogramCsv(const SensitivityReport& report,
                               const std::string& path) {
  CsvTable csv({"bin_low", "bin_high", "count"});
  const Histogram& h = report.stats.histogram;
  for (size_t i = 0; i < h.counts.size(); ++i) {
    RETURN_IF_ERROR(csv.AddRow({FormatDouble(h.edges[i]),
                                FormatDouble(h.edges[i + 1]),
                                absl::StrCat(h.counts[i])}));
  }
  return csv.WriteTo(path);
}

absl::Status WriteHeatmapCsv(const SensitivityReport& report,
                             const std::string& path, int limit) {
  CsvTable csv({"i", "j", "distance"});
  const int n = std::min(limit, report.count);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RETURN_IF_ERROR(csv.AddRow({absl::StrCat(i), absl::StrCat(j),
                                  FormatDouble(report.distance(i, j))}));
    }
  }
  return csv.WriteTo(path);
}

absl::StatusOr<LatentVector> ClipLatent(const LatentVector& z, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    return absl::InvalidArgumentError(
        absl::StrCat("clip radius must be finite and > 0, got ", radius));
  }
  const double norm = L1Norm(z.values);
  if (norm <= radius) return z;
  LatentVector out = z;
  const double factor = radius / norm;
  for (double& v : out.values) v *= factor;
  return out;
}

}  // namespace latentdp
