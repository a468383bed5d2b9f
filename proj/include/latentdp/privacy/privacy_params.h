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

#ifndef LATENTDP_PRIVACY_PRIVACY_PARAMS_H_
#define LATENTDP_PRIVACY_PRIVACY_PARAMS_H_

#include <vector>

#include "absl/status/statusor.h"

namespace latentdp {

// Budget epsilon, feature-space sensitivity and the Laplace scale
// b = sensitivity / epsilon, plus the mask of latent coordinates that
// receive noise.
//
// epsilon = infinity is not representable. "No noise" is sensitivity 0,
// which makes the scale exactly 0 and such params never charge a ledger.
class PrivacyParams {
 public:
  static absl::StatusOr<PrivacyParams> Create(double epsilon,
                                              double sensitivity,
                                              std::vector<bool> mask);

  // Parameterizes by the noise level sensitivity / epsilon instead of by
  // epsilon. Level 0 yields the no-noise params. A positive level needs a
  // positive sensitivity.
  static absl::StatusOr<PrivacyParams> FromNoiseLevel(double level,
                                                      double sensitivity,
                                                      std::vector<bool> mask);

  double epsilon() const { return epsilon_; }
  double sensitivity() const { return sensitivity_; }
  double scale() const { return scale_; }
  const std::vector<bool>& mask() const { return mask_; }

  bool adds_noise() const { return scale_ > 0.0; }
  // True when some coordinate is left unperturbed. The epsilon guarantee
  // then covers the masked subspace only.
  bool partial() const;

 private:
  PrivacyParams(double epsilon, double sensitivity, std::vector<bool> mask)
      : epsilon_(epsilon),
        sensitivity_(sensitivity),
        scale_(sensitivity / epsilon),
        mask_(std::move(mask)) {}

  double epsilon_;
  double sensitivity_;
  double scale_;
  std::vector<bool> mask_;
};

std::vector<bool> FullMask(int latent_dim);
// True on the first identity_len coordinates only.
std::vector<bool> IdentityMask(int latent_dim, int identity_len);

}  // namespace latentdp

#endif  // LATENTDP_PRIVACY_PRIVACY_PARAMS_H_
