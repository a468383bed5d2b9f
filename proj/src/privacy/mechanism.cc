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
#include "latentdp/privacy/mechanism.h"

#include "absl/strings/str_cat.h"
#include "latentdp/base/status_macros.h"
#include "latentdp/privacy/laplace.h"
#include "latentdp/privacy/sensitivity.h"

namespace latentdp {
namespace {

absl::StatusOr<LatentVector> Release(const LatentVector& z,
                                     const PrivacyParams& params,
                                     RngStream& stream,
                                     const ReleaseOptions& options) {
  if (!options.clip_radius.has_value()) return PerturbLatent(z, params, stream);
  ASSIGN_OR_RETURN(LatentVector clipped, ClipLatent(z, *options.clip_radius));
  return PerturbLatent(clipped, params, stream);
}

}  // namespace

absl::StatusOr<LatentVector> PerturbLatent(const LatentVector& z,
                                           const PrivacyParams& params,
                                           RngStream& stream) {
  if (params.mask().size() != z.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mask length ", params.mask().size(), " != latent length ", z.size()));
  }
  LatentVector out = z;
  for (size_t i = 0; i < out.values.size(); ++i) {
    ASSIGN_OR_RETURN(double noise, LaplaceSample(stream, params.scale()));
    if (params.mask()[i]) out.values[i] += noise;
  }
  return out;
}

absl::StatusOr<Image> DpImage(const AutoencoderModel& model, const Image& x,
                              const PrivacyParams& params, RngStream& stream,
                              const ReleaseOptions& options) {
  ASSIGN_OR_RETURN(LatentVector z, Encode(model, x));
  ASSIGN_OR_RETURN(LatentVector noisy, Release(z, params, stream, options));
  return Decode(model, noisy);
}

absl::StatusOr<std::vector<Image>> DpImageBatch(
    const AutoencoderModel& model, std::span<const Image> images,
    const PrivacyParams& params, uint64_t seed, uint64_t task_tag,
    const ReleaseOptions& options) {
  ASSIGN_OR_RETURN(std::vector<LatentVector> codes, EncodeBatch(model, images));
  for (size_t i = 0; i < codes.size(); ++i) {
    RngStream stream(seed, TaskId(task_tag, i));
    ASSIGN_OR_RETURN(codes[i], Release(codes[i], params, stream, options));
  }
  return DecodeBatch(model, codes);
}

}  // namespace latentdp
