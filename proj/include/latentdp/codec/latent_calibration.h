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

// Function-preserving reparameterizations of a trained model's latent space.
// Both fold into the weights on either side of the latent layer, so
// decode(encode(x)) is unchanged up to rounding and the model file format
// carries no extra state.

#ifndef LATENTDP_CODEC_LATENT_CALIBRATION_H_
#define LATENTDP_CODEC_LATENT_CALIBRATION_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "latentdp/codec/autoencoder.h"

namespace latentdp {

// Shifts and rescales every latent coordinate to zero mean and unit sample
// variance over `images`. Coordinates that are constant are only shifted.
// Afterwards a noise scale of 1 is one standard deviation of the corpus
// spread in every coordinate.
absl::Status StandardizeLatentSpace(AutoencoderModel& model,
                                    std::span<const Image> images);

// Per-coordinate ratio of between-identity to within-identity sum of
// squares. Labels must name at least two identities and at least one of
// them must appear twice.
absl::StatusOr<std::vector<double>> IdentityScores(
    const AutoencoderModel& model, std::span<const Image> images,
    std::span<const int> labels);

// Reorders latent coordinates; new coordinate k is old coordinate order[k].
absl::Status PermuteLatents(AutoencoderModel& model, std::span<const int> order);

// Moves the coordinates with the highest identity scores to the front, so
// the identity block is the most identity-discriminative part of the code.
// Returns the applied order.
absl::StatusOr<std::vector<int>> OrderLatentsByIdentity(
    AutoencoderModel& model, std::span<const Image> images,
    std::span<const int> labels);

}  // namespace latentdp

#endif  // LATENTDP_CODEC_LATENT_CALIBRATION_H_
