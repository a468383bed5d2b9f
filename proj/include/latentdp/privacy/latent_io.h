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

// Latent vector files. Binary layout, little-endian:
//
//   "DPLZ" | version u32 (= 1) | count u32 | m u32 | count*m f64
//
// The identity block length is not stored; readers supply it.

#ifndef LATENTDP_PRIVACY_LATENT_IO_H_
#define LATENTDP_PRIVACY_LATENT_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "latentdp/codec/image.h"

namespace latentdp {

inline constexpr absl::string_view kLatentMagic = "DPLZ";
inline constexpr uint32_t kLatentVersion = 1;

absl::StatusOr<std::string> SerializeLatents(
    std::span<const LatentVector> latents);
absl::StatusOr<std::vector<LatentVector>> ParseLatents(absl::string_view bytes,
                                                       int identity_len);

absl::Status WriteLatents(std::span<const LatentVector> latents,
                          const std::string& path);
absl::StatusOr<std::vector<LatentVector>> ReadLatents(const std::string& path,
                                                      int identity_len);

// CSV `index,z0,...,z{m-1}`.
absl::Status WriteLatentsCsv(std::span<const LatentVector> latents,
                             const std::string& path);

}  // namespace latentdp

#endif  // LATENTDP_PRIVACY_LATENT_IO_H_
