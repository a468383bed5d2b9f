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

// Fully connected autoencoder: the encoder maps an image to a latent vector,
// the decoder maps a (possibly perturbed) latent vector back to an image.
//
// Layer dims form a mirrored chain, e.g. 1024 -> 256 -> 64 -> 32 -> 64 ->
// 256 -> 1024. Hidden layers use tanh, the latent layer is linear so the
// latent space is unbounded, and the output layer is a logistic sigmoid so
// reconstructions stay inside the pixel range.

#ifndef LATENTDP_CODEC_AUTOENCODER_H_
#define LATENTDP_CODEC_AUTOENCODER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "latentdp/codec/image.h"

namespace latentdp {

enum class Activation { kTanh, kIdentity, kSigmoid };

struct DenseLayer {
  int in = 0;
  int out = 0;
  std::vector<double> weights;  // out x in, row-major
  std::vector<double> bias;     // out

  friend bool operator==(const DenseLayer&, const DenseLayer&) = default;
};

class AutoencoderModel {
 public:
  // All parameters zero.
  static absl::StatusOr<AutoencoderModel> Create(std::vector<int> layer_dims,
                                                 int identity_len);
  static absl::StatusOr<AutoencoderModel> FromLayers(
      std::vector<int> layer_dims, int identity_len,
      std::vector<DenseLayer> layers);

  const std::vector<int>& layer_dims() const { return layer_dims_; }
  int identity_len() const { return identity_len_; }
  int input_dim() const { return layer_dims_.front(); }
  int latent_dim() const { return layer_dims_[layer_dims_.size() / 2]; }
  int num_layers() const { return static_cast<int>(layers_.size()); }
  int encoder_layers() const { return num_layers() / 2; }
  // Square image side implied by the input dim.
  int side() const { return side_; }

  Activation activation(int layer) const;

  const std::vector<DenseLayer>& layers() const { return layers_; }
  std::vector<DenseLayer>& mutable_layers() { return layers_; }
  size_t parameter_count() const;
  bool AllFinite() const;

  friend bool operator==(const AutoencoderModel&,
                         const AutoencoderModel&) = default;

 private:
  AutoencoderModel(std::vector<int> dims, int identity_len, int side,
                   std::vector<DenseLayer> layers)
      : layer_dims_(std::move(dims)),
        identity_len_(identity_len),
        side_(side),
        layers_(std::move(layers)) {}

  std::vector<int> layer_dims_;
  int identity_len_ = 0;
  int side_ = 0;
  std::vector<DenseLayer> layers_;
};

absl::StatusOr<LatentVector> Encode(const AutoencoderModel& model,
                                    const Image& image);
absl::StatusOr<Image> Decode(const AutoencoderModel& model,
                             const LatentVector& latent);

absl::StatusOr<std::vector<LatentVector>> EncodeBatch(
    const AutoencoderModel& model, std::span<const Image> images);
absl::StatusOr<std::vector<Image>> DecodeBatch(
    const AutoencoderModel& model, std::span<const LatentVector> latents);

// decode(encode(x)) for every image, averaged squared pixel error.
absl::StatusOr<double> ReconstructionMse(const AutoencoderModel& model,
                                         std::span<const Image> images);

struct LossAndGradients {
  double loss = 0.0;
  // Same shapes as model.layers().
  std::vector<DenseLayer> gradients;
};

// Mean over batch and pixels of (decode(encode(x)) - x)^2, with gradients
// by backpropagation.
absl::StatusOr<LossAndGradients> ComputeLossAndGradients(
    const AutoencoderModel& model, std::span<const Image> batch);

// Loss only; shares the forward pass with ComputeLossAndGradients.
absl::StatusOr<double> ComputeLoss(const AutoencoderModel& model,
                                   std::span<const Image> batch);

struct TrainConfig {
  int epochs = 60;
  int batch_size = 4;
  double learning_rate = 2.0;
  double momentum = 0.9;
  uint64_t seed = 1;
  // Initial weights are uniform in +-init_scale / sqrt(fan_in).
  double init_scale = 2.0;
  std::vector<int> hidden_dims = {256, 64};
  int latent_dim = 32;
  int identity_len = 12;

  absl::Status Validate() const;
};

struct TrainResult {
  AutoencoderModel model;
  // Mean minibatch loss per epoch.
  std::vector<double> loss_trace;
};

// Random init from the seeded stream, shape from config and image side.
absl::StatusOr<AutoencoderModel> InitializeModel(int side,
                                                 const TrainConfig& config);

// Minibatch gradient descent with momentum. Single-threaded and a pure
// function of (corpus, config).
absl::StatusOr<TrainResult> Train(std::span<const Image> corpus,
                                  const TrainConfig& config);

}  // namespace latentdp

#endif  // LATENTDP_CODEC_AUTOENCODER_H_
