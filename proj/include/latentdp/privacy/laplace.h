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

#ifndef LATENTDP_PRIVACY_LAPLACE_H_
#define LATENTDP_PRIVACY_LAPLACE_H_

#include "absl/status/statusor.h"
#include "latentdp/numerics/rng.h"

namespace latentdp {

// Inverse CDF of Laplace(0, scale) at u in (-0.5, 0.5]:
//   x = -scale * sgn(u) * ln(1 - 2|u|).
// u = 0.5 would give an infinite sample; the log argument is floored at
// 2^-53, capping samples at about 36.7 * scale.
double LaplaceFromUniform(double u, double scale);

// One UniformOpen draw through LaplaceFromUniform. A draw is consumed even
// when scale == 0 (which returns exactly 0) so streams stay aligned across
// noise levels.
absl::StatusOr<double> LaplaceSample(RngStream& stream, double scale);

double LaplaceCdf(double x, double scale);

}  // namespace latentdp

#endif  // LATENTDP_PRIVACY_LAPLACE_H_
