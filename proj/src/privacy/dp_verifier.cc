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
#include "latentdp/privacy/dp_verifier.h"

#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"
#include "latentdp/base/status_macros.h"
#include "latentdp/privacy/laplace.h"

namespace latentdp {
namespace {

absl::Status CheckArgs(double scale, double delta_f, int bins) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat("verifier scale must be > 0, got ", scale));
  }
  if (!(delta_f >= 0.0) || !std::isfinite(delta_f)) {
    return absl::InvalidArgumentError(
        absl::StrCat("verifier delta_f must be >= 0, got ", delta_f));
  }
  if (bins < 1) return absl::InvalidArgumentError("bins must be >= 1");
  return absl::OkStatus();
}

DpRatioCheck Compare(const std::vector<double>& p, const std::vector<double>& q,
                     double scale, double delta_f, double slack) {
  DpRatioCheck check;
  for (size_t i = 0; i < p.size(); ++i) {
    const double r = std::abs(std::log(p[i] / q[i]));
    if (r > check.max_log_ratio) {
      check.max_log_ratio = r;
      check.worst_cell = static_cast<int>(i);
    }
  }
  check.bound = (delta_f / scale) * (1.0 + slack);
  check.pass = check.max_log_ratio <= check.bound;
  return check;
}

}  // namespace

absl::StatusOr<DpRatioCheck> VerifyDpEmpirical(double scale, double delta_f,
                                               int64_t n_samples, int bins,
                                               RngStream& stream,
                                               double slack) {
  RETURN_IF_ERROR(CheckArgs(scale, delta_f, bins));
  if (n_samples < kMinVerifierSamples) {
    return absl::InvalidArgumentError(absl::StrCat(
        "verifier needs >= ", kMinVerifierSamples, " samples, got ", n_samples));
  }
  const double lo = -8.0 * scale;
  const double hi = delta_f + 8.0 * scale;
  const double width = (hi - lo) / bins;
  auto fill = [&](double center, std::vector<double>& counts) -> absl::Status {
    counts.assign(static_cast<size_t>(bins), 1.0);  // add-one smoothing
    for (int64_t k = 0; k < n_samples; ++k) {
      ASSIGN_OR_RETURN(double noise, LaplaceSample(stream, scale));
      const double x = center + noise;
      if (x < lo || x > hi) continue;
      int cell = static_cast<int>((x - lo) / width);
      if (cell == bins) cell = bins - 1;
      counts[static_cast<size_t>(cell)] += 1.0;
    }
    double total = 0.0;
    for (double c : counts) total += c;
    for (double& c : counts) c /= total;
    return absl::OkStatus();
  };
  std::vector<double> p;
  std::vector<double> q;
  RETURN_IF_ERROR(fill(0.0, p));
  RETURN_IF_ERROR(fill(delta_f, q));
  return Compare(p, q, scale, delta_f, slack);
}

absl::StatusOr<DpRatioCheck> VerifyDpAnalytic(double scale, double delta_f,
                                              int bins, double slack) {
  RETURN_IF_ERROR(CheckArgs(scale, delta_f, bins));
  const double lo = -8.0 * scale;
  const double hi = delta_f + 8.0 * scale;
  std::vector<double> p(static_cast<size_t>(bins));
  std::vector<double> q(static_cast<size_t>(bins));
  for (int i = 0; i < bins; ++i) {
    const double a = lo + (hi - lo) * i / bins;
    const double b = lo + (hi - lo) * (i + 1) / bins;
    p[static_cast<size_t>(i)] = LaplaceCdf(b, scale) - LaplaceCdf(a, scale);
    q[static_cast<size_t>(i)] =
        LaplaceCdf(b - delta_f, scale) - LaplaceCdf(a - delta_f, scale);
  }
  return Compare(p, q, scale, delta_f, slack);
}

}  // namespace latentdp
