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

// Model file layout, all little-endian:
//
//   "DPIM"                 4 bytes
//   version                u32 (= 1)
//   dim count              u32
//   layer dims             u32 each, the full mirrored chain
//   identity_len           u32
//   per dense layer        weights (out x in, row-major) then biases, f64
//
// Parse errors are distinct: InvalidArgument("bad magic"), FailedPrecondition
// for an unsupported version, DataLoss("truncated") for short input.

#ifndef LATENTDP_CODEC_MODEL_IO_H_
#define LATENTDP_CODEC_MODEL_IO_H_

#include <cstdint>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "latentdp/codec/autoencoder.h"

namespace latentdp {

inline constexpr absl::string_view kModelMagic = "DPIM";
inline constexpr uint32_t kModelVersion = 1;

std::string SerializeModel(const AutoencoderModel& model);
absl::StatusOr<AutoencoderModel> ParseModel(absl::string_view bytes);

absl::Status SaveModel(const AutoencoderModel& model, const std::string& path);
absl::StatusOr<AutoencoderModel> LoadModel(const std::string& path);

}  // namespace latentdp

#endif  // LATENTDP_CODEC_MODEL_IO_H_
