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

// The latent-space Laplace mechanism:
//
//   perturbed image = decode(encode(x) + N),  N_i ~ Laplace(sensitivity/eps)
//
// The noisy code is eps-DP with respect to any two inputs whose codes are
// within `sensitivity` in l1, since the per-coordinate density ratios
// multiply to at most exp(eps). Decoding uses no information about the
// input beyond the noisy code, so the image carries the same guarantee.
//
// Releases must never be filtered by comparing them with the input (for
// example, keeping only outputs that still "look like" the original): that
// selection depends on the private image and voids the guarantee.

#ifndef LATENTDP_PRIVACY_MECHANISM_H_
#define LATENTDP_PRIVACY_MECHANISM_H_

#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "latentdp/codec/autoencoder.h"
#include "latentdp/codec/image.h"
#include "latentdp/numerics/rng.h"
#include "latentdp/privacy/privacy_params.h"

namespace latentdp {

// Adds Laplace(params.scale()) to every coordinate where the mask is set.
// One draw is consumed per coordinate, masked or not, in coordinate order,
// so unmasked coordinates come back bit-identical and the noise on a given
// coordinate does not depend on the mask.
absl::StatusOr<LatentVector> PerturbLatent(const LatentVector& z,
                                           const PrivacyParams& params,
                                           RngStream& stream);

struct ReleaseOptions {
  // When set, codes are clipped into this l1 ball before noise; the params
  // should then carry sensitivity 2 * clip_radius.
  std::optional<double> clip_radius;
};

absl::StatusOr<Image> DpImage(const AutoencoderModel& model, const Image& x,
                              const PrivacyParams& params, RngStream& stream,
                              const ReleaseOptions& options = {});

// Batched DpImage; image i uses RngStream(seed, TaskId(task_tag, i)).
absl::StatusOr<std::vector<Image>> DpImageBatch(
    const AutoencoderModel& model, std::span<const Image> images,
    const PrivacyParams& params, uint64_t seed, uint64_t task_tag,
    const ReleaseOptions& options = {});

}  // namespace latentdp

#endif  // LATENTDP_PRIVACY_MECHANISM_H_
