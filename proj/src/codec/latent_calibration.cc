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
#include "latentdp/codec/latent_calibration.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {

absl::Status StandardizeLatentSpace(AutoencoderModel& model,
                                    std::span<const Image> images) {
  if (images.size() < 2) {
    return absl::InvalidArgumentError("standardizing needs at least 2 images");
  }
  ASSIGN_OR_RETURN(std::vector<LatentVector> latents,
                   EncodeBatch(model, images));
  const int m = model.latent_dim();
  const double n = static_cast<double>(latents.size());
  std::vector<double> mean(static_cast<size_t>(m), 0.0);
  std::vector<double> sd(static_cast<size_t>(m), 0.0);
  for (const LatentVector& z : latents) {
    for (int i = 0; i < m; ++i) mean[static_cast<size_t>(i)] += z.values[static_cast<size_t>(i)];
  }
  for (double& v : mean) v /= n;
  for (const LatentVector& z : latents) {
    for (int i = 0; i < m; ++i) {
      const double d = z.values[static_cast<size_t>(i)] - mean[static_cast<size_t>(i)];
      sd[static_cast<size_t>(i)] += d * d;
    }
  }
  for (double& v : sd) {
    v = std::sqrt(v / (n - 1.0));
    if (!(v > 0.0)) v = 1.0;
  }

  DenseLayer& enc = model.mutable_layers()[static_cast<size_t>(model.encoder_layers() - 1)];
  DenseLayer& dec = model.mutable_layers()[static_cast<size_t>(model.encoder_layers())];
  // Decoder bias absorbs the removed mean: b + W * mean.
  for (int r = 0; r < dec.out; ++r) {
    double shift = 0.0;
    for (int c = 0; c < dec.in; ++c) {
      shift += dec.weights[static_cast<size_t>(r * dec.in + c)] * mean[static_cast<size_t>(c)];
    }
    dec.bias[static_cast<size_t>(r)] += shift;
    for (int c = 0; c < dec.in; ++c) {
      dec.weights[static_cast<size_t>(r * dec.in + c)] *= sd[static_cast<size_t>(c)];
    }
  }
  for (int r = 0; r < enc.out; ++r) {
    const double s = sd[static_cast<size_t>(r)];
    for (int c = 0; c < enc.in; ++c) enc.weights[static_cast<size_t>(r * enc.in + c)] /= s;
    enc.bias[static_cast<size_t>(r)] = (enc.bias[static_cast<size_t>(r)] - mean[static_cast<size_t>(r)]) / s;
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<double>> IdentityScores(
    const AutoencoderModel& model, std::span<const Image> images,
    std::span<const int> labels) {
  if (images.size() != labels.size()) {
    return absl::InvalidArgumentError("one label per image required");
  }
  std::map<int, std::vector<size_t>> groups;
  for (size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);
  const bool any_repeat = std::any_of(groups.begin(), groups.end(), [](const auto& g) {
    return g.second.size() >= 2;
  });
  if (groups.size() < 2 || !any_repeat) {
    return absl::InvalidArgumentError(
        "identity scores need >= 2 identities and a repeated identity");
  }
  ASSIGN_OR_RETURN(std::vector<LatentVector> latents,
                   EncodeBatch(model, images));
  const size_t m = static_cast<size_t>(model.latent_dim());
  std::vector<double> grand(m, 0.0);
  for (const LatentVector& z : latents) {
    for (size_t i = 0; i < m; ++i) grand[i] += z.values[i];
  }
  for (double& g : grand) g /= static_cast<double>(latents.size());

  std::vector<double> between(m, 0.0);
  std::vector<double> within(m, 0.0);
  for (const auto& [label, members] : groups) {
    std::vector<double> mean(m, 0.0);
    for (size_t idx : members) {
      for (size_t i = 0; i < m; ++i) mean[i] += latents[idx].values[i];
    }
    for (double& v : mean) v /= static_cast<double>(members.size());
    for (size_t i = 0; i < m; ++i) {
      const double d = mean[i] - grand[i];
      between[i] += static_cast<double>(members.size()) * d * d;
    }
    for (size_t idx : members) {
      for (size_t i = 0; i < m; ++i) {
        const double d = latents[idx].values[i] - mean[i];
        within[i] += d * d;
      }
    }
  }
  std::vector<double> scores(m);
  for (size_t i = 0; i < m; ++i) {
    if (within[i] > 0.0) {
      scores[i] = between[i] / within[i];
    } else {
      scores[i] = between[i] > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
  }
  return scores;
}

absl::Status PermuteLatents(AutoencoderModel& model, std::span<const int> order) {
  const int m = model.latent_dim();
  if (order.size() != static_cast<size_t>(m)) {
    return absl::InvalidArgumentError("permutation length must equal latent dim");
  }
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (int k : order) {
    if (k < 0 || k >= m || seen[static_cast<size_t>(k)]) {
      return absl::InvalidArgumentError("order is not a permutation");
    }
    seen[static_cast<size_t>(k)] = true;
  }
  DenseLayer& enc = model.mutable_layers()[static_cast<size_t>(model.encoder_layers() - 1)];
  DenseLayer& dec = model.mutable_layers()[static_cast<size_t>(model.encoder_layers())];
  const DenseLayer enc_old = enc;
  const DenseLayer dec_old = dec;
  for (int k = 0; k < m; ++k) {
    const size_t src = static_cast<size_t>(order[static_cast<size_t>(k)]);
    std::copy_n(enc_old.weights.begin() + static_cast<std::ptrdiff_t>(src * static_cast<size_t>(enc.in)),
                enc.in,
                enc.weights.begin() + static_cast<std::ptrdiff_t>(static_cast<size_t>(k) * static_cast<size_t>(enc.in)));
    enc.bias[static_cast<size_t>(k)] = enc_old.bias[src];
    for (int r = 0; r < dec.out; ++r) {
      dec.weights[static_cast<size_t>(r * dec.in + k)] =
          dec_old.weights[static_cast<size_t>(r * dec.in) + src];
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<int>> OrderLatentsByIdentity(
    AutoencoderModel& model, std::span<const Image> images,
    std::span<const int> labels) {
  ASSIGN_OR_RETURN(std::vector<double> scores,
                   IdentityScores(model, images, labels));
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return scores[static_cast<size_t>(a)] > scores[static_cast<size_t>(b)];
  });
  RETURN_IF_ERROR(PermuteLatents(model, order));
  return order;
}

}  // namespace latentdp
