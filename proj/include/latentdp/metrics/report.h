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

// Per-image and aggregate privacy/utility measurements for a set of
// (original, released) pairs.

#ifndef LATENTDP_METRICS_REPORT_H_
#define LATENTDP_METRICS_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "latentdp/codec/autoencoder.h"
#include "latentdp/codec/image.h"
#include "latentdp/metrics/ssim.h"

namespace latentdp {

struct MetricsRow {
  int image_id = 0;
  double l2 = 0.0;
  double ald_inf = 0.0;
  double ssim = 0.0;
  double iss = 0.0;
};

struct MetricsReport {
  // Sorted by image_id; the means are summed in this order.
  std::vector<MetricsRow> rows;
  double mean_l2 = 0.0;
  double mean_ald_inf = 0.0;
  double mean_ssim = 0.0;
  double mean_iss = 0.0;
  // Over the identity embeddings of the originals versus the releases.
  double fed = 0.0;
  double fppsr = 0.0;
  double threshold = 0.0;
};

// Needs at least two pairs (FED fits a covariance) and distinct ids.
absl::StatusOr<MetricsReport> EvaluatePairs(const AutoencoderModel& model,
                                            std::span<const int> image_ids,
                                            std::span<const Image> originals,
                                            std::span<const Image> released,
                                            double threshold,
                                            const SsimOptions& ssim = {});

// `image_id,l2,ald_inf,ssim,iss`
absl::Status WriteRowsCsv(const MetricsReport& report, const std::string& path);
// `metric,value`
absl::Status WriteAggregateCsv(const MetricsReport& report,
                               const std::string& path);

}  // namespace latentdp

#endif  // LATENTDP_METRICS_REPORT_H_
