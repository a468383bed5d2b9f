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

#ifndef LATENTDP_METRICS_SSIM_H_
#define LATENTDP_METRICS_SSIM_H_

#include "absl/status/statusor.h"
#include "latentdp/codec/image.h"

namespace latentdp {

struct SsimOptions {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;
};

// Mean SSIM over every window position that lies fully inside the image,
// using a normalized Gaussian window.
absl::StatusOr<double> Ssim(const Image& x, const Image& y,
                            const SsimOptions& options = {});

}  // namespace latentdp

#endif  // LATENTDP_METRICS_SSIM_H_
