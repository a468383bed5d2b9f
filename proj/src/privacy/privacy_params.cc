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
#include "latentdp/privacy/privacy_params.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace latentdp {

absl::StatusOr<PrivacyParams> PrivacyParams::Create(double epsilon,
                                                    double sensitivity,
                                                    std::vector<bool> mask) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be finite and > 0, got ", epsilon));
  }
  if (!(sensitivity >= 0.0) || !std::isfinite(sensitivity)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sensitivity must be finite and >= 0, got ", sensitivity));
  }
  if (mask.empty()) return absl::InvalidArgumentError("empty noise mask");
  return PrivacyParams(epsilon, sensitivity, std::move(mask));
}

absl::StatusOr<PrivacyParams> PrivacyParams::FromNoiseLevel(
    double level, double sensitivity, std::vector<bool> mask) {
  if (!(level >= 0.0) || !std::isfinite(level)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise level must be finite and >= 0, got ", level));
  }
  if (level == 0.0) return Create(1.0, 0.0, std::move(mask));
  if (!(sensitivity > 0.0)) {
    return absl::InvalidArgumentError(
        "a positive noise level needs a positive sensitivity");
  }
  return Create(sensitivity / level, sensitivity, std::move(mask));
}

bool PrivacyParams::partial() const {
  return std::find(mask_.begin(), mask_.end(), false) != mask_.end();
}

std::vector<bool> FullMask(int latent_dim) {
  return std::vector<bool>(static_cast<size_t>(latent_dim), true);
}

std::vector<bool> IdentityMask(int latent_dim, int identity_len) {
  std::vector<bool> mask(static_cast<size_t>(latent_dim), false);
  for (int i = 0; i < identity_len && i < latent_dim; ++i) mask[i] = true;
  return mask;
}

}  // namespace latentdp
