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

// One-dimensional checks of the Laplace privacy-loss bound: the output
// distributions for two inputs `delta_f` apart must have a log density
// ratio of at most delta_f / scale everywhere. Because the mechanism adds
// i.i.d. noise per coordinate, the m-dimensional bound reduces to this
// per-coordinate one.

#ifndef LATENTDP_PRIVACY_DP_VERIFIER_H_
#define LATENTDP_PRIVACY_DP_VERIFIER_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "latentdp/numerics/rng.h"

namespace latentdp {

struct DpRatioCheck {
  double max_log_ratio = 0.0;
  // (delta_f / scale) * (1 + slack).
  double bound = 0.0;
  bool pass = false;
  int worst_cell = 0;
};

inline constexpr int64_t kMinVerifierSamples = 100000;

// Draws n_samples of Laplace(scale) and of delta_f + Laplace(scale), bins
// both into `bins` equal cells over [-8 scale, delta_f + 8 scale] (samples
// outside are dropped), applies add-one smoothing and reports the largest
// |ln(p/q)| over the cells.
absl::StatusOr<DpRatioCheck> VerifyDpEmpirical(double scale, double delta_f,
                                               int64_t n_samples, int bins,
                                               RngStream& stream,
                                               double slack = 0.1);

// The same cell ratio computed from exact Laplace cell masses, with no
// sampling. Bounded by delta_f / scale, with equality on cells outside
// (0, delta_f).
absl::StatusOr<DpRatioCheck> VerifyDpAnalytic(double scale, double delta_f,
                                              int bins, double slack = 0.1);

}  // namespace latentdp

#endif  // LATENTDP_PRIVACY_DP_VERIFIER_H_
