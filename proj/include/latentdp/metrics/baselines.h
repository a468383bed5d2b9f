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

// Conventional obfuscation baselines: Gaussian blur and pixelation.

#ifndef LATENTDP_METRICS_BASELINES_H_
#define LATENTDP_METRICS_BASELINES_H_

#include "absl/status/statusor.h"
#include "latentdp/codec/image.h"

namespace latentdp {

// Separable Gaussian blur with a normalized (2 * radius + 1)-tap kernel and
// clamp-to-edge borders. Radius 0 returns the input unchanged.
absl::StatusOr<Image> GaussianBlur(const Image& x, double sigma, int radius);

// Radius used when only sigma is given: ceil(3 sigma).
int BlurRadiusFor(double sigma);

// Replaces each block x block tile by its mean. Tiles cut off by the image
// border average over the pixels they actually cover.
absl::StatusOr<Image> Mosaic(const Image& x, int block);

}  // namespace latentdp

#endif  // LATENTDP_METRICS_BASELINES_H_
