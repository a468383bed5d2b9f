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

#ifndef LATENTDP_NUMERICS_SAMPLING_H_
#define LATENTDP_NUMERICS_SAMPLING_H_

#include "absl/status/statusor.h"
#include "latentdp/numerics/rng.h"

namespace latentdp {

// Box-Muller over two UniformOpen draws. Consumes exactly two draws, also
// when std == 0, so a stream's position does not depend on the arguments.
absl::StatusOr<double> GaussianSample(RngStream& stream, double mean,
                                      double std);

}  // namespace latentdp

#endif  // LATENTDP_NUMERICS_SAMPLING_H_
