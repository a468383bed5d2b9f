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
#include "latentdp/codec/autoencoder.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "latentdp/base/status_macros.h"
#include "latentdp/numerics/rng.h"

namespace latentdp {
namespace {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstWeights = Eigen::Map<const RowMatrix>;
using ConstBias = Eigen::Map<const Eigen::RowVectorXd>;

// Output pixels are kept strictly inside (0, 1) even when the sigmoid
// saturates in double precision.
constexpr double kPixelMargin = 0x1.0p-52;

// Stream ids for the training seed.
constexpr uint64_t kInitStream = 1;
constexpr uint64_t kShuffleStream = 2;

void Activate(Activation act, RowMatrix& m) {
  switch (act) {
    case Activation::kTanh:
      m = m.array().tanh();
      break;
    case Activation::kIdentity:
      break;
    case Activation::kSigmoid:
      m = (1.0 + (-m.array()).exp()).inverse();
      break;
  }
}

// Runs layers [first, last) on the rows of `input`. When `trace` is given it
// receives the input followed by every layer's activated output.
RowMatrix Forward(const AutoencoderModel& model, RowMatrix input, int first,
                  int last, std::vector<RowMatrix>* trace) {
  if (trace != nullptr) trace->push_back(input);
  RowMatrix a = std::move(input);
  for (int l = first; l < last; ++l) {
    const DenseLayer& layer = model.layers()[static_cast<size_t>(l)];
    ConstWeights w(layer.weights.data(), layer.out, layer.in);
    ConstBias b(layer.bias.data(), layer.out);
    RowMatrix z = a * w.transpose();
    z.rowwise() += b;
    Activate(model.activation(l), z);
    a = std::move(z);
    if (trace != nullptr) trace->push_back(a);
  }
  return a;
}

// Inference path: every row goes through the same matrix-vector kernel, so
// an image's code and reconstruction do not depend on which other images
// share its batch. Training keeps the faster matrix-matrix Forward.
RowMatrix ForwardRowwise(const AutoencoderModel& model, const RowMatrix& input,
                         int first, int last) {
  RowMatrix out;
  for (Eigen::Index i = 0; i < input.rows(); ++i) {
    RowMatrix a = input.row(i);
    a = Forward(model, std::move(a), first, last, nullptr);
    if (i == 0) out.resize(input.rows(), a.cols());
    out.row(i) = a;
  }
  return out;
}

absl::Status CheckImage(const AutoencoderModel& model, const Image& image) {
  if (image.width() != model.side() || image.height() != model.side()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "image is ", image.width(), "x", image.height(), ", model expects ",
        model.side(), "x", model.side()));
  }
  return absl::OkStatus();
}

absl::StatusOr<RowMatrix> ImagesToRows(const AutoencoderModel& model,
                                       std::span<const Image> images) {
  RowMatrix rows(static_cast<Eigen::Index>(images.size()), model.input_dim());
  for (size_t i = 0; i < images.size(); ++i) {
    RETURN_IF_ERROR(CheckImage(model, images[i]));
    rows.row(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::RowVectorXd>(images[i].pixels().data(),
                                             model.input_dim());
  }
  return rows;
}

absl::Status ValidateDims(const std::vector<int>& dims, int identity_len) {
  if (dims.size() < 3 || dims.size() % 2 == 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "layer dims must be an odd-length chain of at least 3, got ",
        dims.size()));
  }
  for (size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) {
      return absl::InvalidArgumentError("layer dims must be positive");
    }
    if (dims[i] != dims[dims.size() - 1 - i]) {
      return absl::InvalidArgumentError("layer dims must be mirrored");
    }
  }
  const int side = static_cast<int>(std::lround(std::sqrt(dims.front())));
  if (side * side != dims.front()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "input dim ", dims.front(), " is not a square image"));
  }
  const int latent = dims[dims.size() / 2];
  if (identity_len < 0 || identity_len > latent) {
    return absl::InvalidArgumentError(absl::StrCat(
        "identity_len ", identity_len, " outside [0, ", latent, "]"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<AutoencoderModel> AutoencoderModel::Create(
    std::vector<int> layer_dims, int identity_len) {
  RETURN_IF_ERROR(ValidateDims(layer_dims, identity_len));
  std::vector<DenseLayer> layers;
  for (size_t i = 0; i + 1 < layer_dims.size(); ++i) {
    DenseLayer layer;
    layer.in = layer_dims[i];
    layer.out = layer_dims[i + 1];
    layer.weights.assign(
        static_cast<size_t>(layer.in) * static_cast<size_t>(layer.out), 0.0);
    layer.bias.assign(static_cast<size_t>(layer.out), 0.0);
    layers.push_back(std::move(layer));
  }
  return FromLayers(std::move(layer_dims), identity_len, std::move(layers));
}

absl::StatusOr<AutoencoderModel> AutoencoderModel::FromLayers(
    std::vector<int> layer_dims, int identity_len,
    std::vector<DenseLayer> layers) {
  RETURN_IF_ERROR(ValidateDims(layer_dims, identity_len));
  if (layers.size() + 1 != layer_dims.size()) {
    return absl::InvalidArgumentError("layer count does not match dims");
  }
  for (size_t i = 0; i < layers.size(); ++i) {
    const DenseLayer& l = layers[i];
    if (l.in != layer_dims[i] || l.out != layer_dims[i + 1] ||
        l.weights.size() != static_cast<size_t>(l.in) * static_cast<size_t>(l.out) ||
        l.bias.size() != static_cast<size_t>(l.out)) {
      return absl::InvalidArgumentError(
          absl::StrCat("layer ", i, " has inconsistent shape"));
    }
  }
  const int side = static_cast<int>(std::lround(std::sqrt(layer_dims.front())));
  return AutoencoderModel(std::move(layer_dims), identity_len, side,
                          std::move(layers));
}

Activation AutoencoderModel::activation(int layer) const {
  if (layer == num_layers() - 1) return Activation::kSigmoid;
  if (layer == encoder_layers() - 1) return Activation::kIdentity;
  return Activation::kTanh;
}

size_t AutoencoderModel::parameter_count() const {
  size_t n = 0;
  for (const DenseLayer& l : layers_) n += l.weights.size() + l.bias.size();
  return n;
}

bool AutoencoderModel::AllFinite() const {
  for (const DenseLayer& l : layers_) {
    for (double w : l.weights) {
      if (!std::isfinite(w)) return false;
    }
    for (double b : l.bias) {
      if (!std::isfinite(b)) return false;
    }
  }
  return true;
}

absl::StatusOr<std::vector<LatentVector>> EncodeBatch(
    const AutoencoderModel& model, std::span<const Image> images) {
  ASSIGN_OR_RETURN(RowMatrix rows, ImagesToRows(model, images));
  RowMatrix z = ForwardRowwise(model, rows, 0, model.encoder_layers());
  std::vector<LatentVector> out(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    const auto row = z.row(static_cast<Eigen::Index>(i));
    out[i].values.assign(row.data(), row.data() + row.size());
    out[i].identity_len = model.identity_len();
  }
  return out;
}

absl::StatusOr<LatentVector> Encode(const AutoencoderModel& model,
                                    const Image& image) {
  ASSIGN_OR_RETURN(std::vector<LatentVector> out,
                   EncodeBatch(model, std::span<const Image>(&image, 1)));
  return std::move(out.front());
}

absl::StatusOr<std::vector<Image>> DecodeBatch(
    const AutoencoderModel& model, std::span<const LatentVector> latents) {
  const int m = model.latent_dim();
  RowMatrix rows(static_cast<Eigen::Index>(latents.size()), m);
  for (size_t i = 0; i < latents.size(); ++i) {
    if (latents[i].size() != static_cast<size_t>(m)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "latent has length ", latents[i].size(), ", model expects ", m));
    }
    rows.row(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::RowVectorXd>(latents[i].values.data(), m);
  }
  RowMatrix y = ForwardRowwise(model, rows, model.encoder_layers(),
                               model.num_layers());
  std::vector<Image> out;
  out.reserve(latents.size());
  for (size_t i = 0; i < latents.size(); ++i) {
    std::vector<double> pixels(static_cast<size_t>(model.input_dim()));
    for (int p = 0; p < model.input_dim(); ++p) {
      pixels[static_cast<size_t>(p)] =
          std::clamp(y(static_cast<Eigen::Index>(i), p), kPixelMargin,
                     1.0 - kPixelMargin);
    }
    out.push_back(
        Image::FromClamped(model.side(), model.side(), std::move(pixels)));
  }
  return out;
}

absl::StatusOr<Image> Decode(const AutoencoderModel& model,
                             const LatentVector& latent) {
  ASSIGN_OR_RETURN(
      std::vector<Image> out,
      DecodeBatch(model, std::span<const LatentVector>(&latent, 1)));
  return std::move(out.front());
}

absl::StatusOr<double> ReconstructionMse(const AutoencoderModel& model,
                                         std::span<const Image> images) {
  if (images.empty()) {
    return absl::InvalidArgumentError("reconstruction error of no images");
  }
  return ComputeLoss(model, images);
}

absl::StatusOr<double> ComputeLoss(const AutoencoderModel& model,
                                   std::span<const Image> batch) {
  if (batch.empty()) return absl::InvalidArgumentError("empty batch");
  ASSIGN_OR_RETURN(RowMatrix x, ImagesToRows(model, batch));
  RowMatrix y = Forward(model, x, 0, model.num_layers(), nullptr);
  return (y - x).squaredNorm() / static_cast<double>(x.size());
}

absl::StatusOr<LossAndGradients> ComputeLossAndGradients(
    const AutoencoderModel& model, std::span<const Image> batch) {
  if (batch.empty()) return absl::InvalidArgumentError("empty batch");
  ASSIGN_OR_RETURN(RowMatrix x, ImagesToRows(model, batch));
  std::vector<RowMatrix> acts;
  acts.reserve(static_cast<size_t>(model.num_layers()) + 1);
  Forward(model, x, 0, model.num_layers(), &acts);
  const RowMatrix& y = acts.back();

  LossAndGradients result;
  const double count = static_cast<double>(x.size());
  result.loss = (y - x).squaredNorm() / count;

  // dL/dz at the sigmoid output.
  RowMatrix delta =
      ((2.0 / count) * (y - x)).array() * (y.array() * (1.0 - y.array()));
  result.gradients.resize(model.layers().size());
  for (int l = model.num_layers() - 1; l >= 0; --l) {
    const DenseLayer& layer = model.layers()[static_cast<size_t>(l)];
    DenseLayer& grad = result.gradients[static_cast<size_t>(l)];
    grad.in = layer.in;
    grad.out = layer.out;
    grad.weights.resize(layer.weights.size());
    grad.bias.resize(layer.bias.size());
    const RowMatrix& input = acts[static_cast<size_t>(l)];
    Eigen::Map<RowMatrix>(grad.weights.data(), layer.out, layer.in).noalias() =
        delta.transpose() * input;
    Eigen::Map<Eigen::RowVectorXd>(grad.bias.data(), layer.out) =
        delta.colwise().sum();
    if (l == 0) break;
    ConstWeights w(layer.weights.data(), layer.out, layer.in);
    RowMatrix upstream = delta * w;
    if (model.activation(l - 1) == Activation::kTanh) {
      upstream.array() *= 1.0 - input.array().square();
    }
    delta = std::move(upstream);
  }
  return result;
}

absl::Status TrainConfig::Validate() const {
  if (epochs < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("epochs must be >= 1, got ", epochs));
  }
  if (batch_size < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("batch_size must be >= 1, got ", batch_size));
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    return absl::InvalidArgumentError(
        absl::StrCat("learning_rate must be > 0, got ", learning_rate));
  }
  if (!(momentum >= 0.0 && momentum < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("momentum must be in [0, 1), got ", momentum));
  }
  if (!(init_scale > 0.0)) {
    return absl::InvalidArgumentError("init_scale must be > 0");
  }
  if (latent_dim < 1) return absl::InvalidArgumentError("latent_dim must be >= 1");
  if (identity_len < 0 || identity_len > latent_dim) {
    return absl::InvalidArgumentError(absl::StrCat(
        "identity_len must be in [0, latent_dim = ", latent_dim, "], got ",
        identity_len));
  }
  for (int h : hidden_dims) {
    if (h < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("hidden dims must be >= 1, got ", h));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<AutoencoderModel> InitializeModel(int side,
                                                 const TrainConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  std::vector<int> dims = {side * side};
  dims.insert(dims.end(), config.hidden_dims.begin(), config.hidden_dims.end());
  dims.push_back(config.latent_dim);
  dims.insert(dims.end(), config.hidden_dims.rbegin(),
              config.hidden_dims.rend());
  dims.push_back(side * side);
  ASSIGN_OR_RETURN(AutoencoderModel model,
                   AutoencoderModel::Create(dims, config.identity_len));
  RngStream rng(config.seed, kInitStream);
  for (DenseLayer& layer : model.mutable_layers()) {
    const double bound = config.init_scale / std::sqrt(layer.in);
    for (double& w : layer.weights) w = 2.0 * rng.UniformOpen() * bound;
  }
  return model;
}

absl::StatusOr<TrainResult> Train(std::span<const Image> corpus,
                                  const TrainConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  if (corpus.empty()) return absl::InvalidArgumentError("empty corpus");
  const int side = corpus.front().width();
  for (const Image& img : corpus) {
    if (img.width() != side || img.height() != side) {
      return absl::InvalidArgumentError(
          "corpus images must all be square with the same side");
    }
  }
  ASSIGN_OR_RETURN(AutoencoderModel model, InitializeModel(side, config));

  std::vector<DenseLayer> velocity = model.layers();
  for (DenseLayer& v : velocity) {
    std::fill(v.weights.begin(), v.weights.end(), 0.0);
    std::fill(v.bias.begin(), v.bias.end(), 0.0);
  }

  RngStream shuffle_rng(config.seed, kShuffleStream);
  std::vector<size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::vector<Image> batch;
  TrainResult result{model, {}};

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[shuffle_rng.NextU64() % i]);
    }
    double epoch_loss = 0.0;
    int batches = 0;
    for (size_t start = 0; start < order.size();
         start += static_cast<size_t>(config.batch_size)) {
      const size_t end =
          std::min(order.size(), start + static_cast<size_t>(config.batch_size));
      batch.clear();
      for (size_t k = start; k < end; ++k) batch.push_back(corpus[order[k]]);
      ASSIGN_OR_RETURN(LossAndGradients lg,
                       ComputeLossAndGradients(model, batch));
      if (!std::isfinite(lg.loss)) {
        return absl::InternalError(absl::StrCat(
            "non-finite loss at epoch ", epoch, ", batch ", batches,
            "; lower learning_rate or init_scale"));
      }
      epoch_loss += lg.loss;
      ++batches;
      for (size_t l = 0; l < velocity.size(); ++l) {
        DenseLayer& v = velocity[l];
        DenseLayer& p = model.mutable_layers()[l];
        const DenseLayer& g = lg.gradients[l];
        for (size_t k = 0; k < v.weights.size(); ++k) {
          v.weights[k] =
              config.momentum * v.weights[k] - config.learning_rate * g.weights[k];
          p.weights[k] += v.weights[k];
        }
        for (size_t k = 0; k < v.bias.size(); ++k) {
          v.bias[k] =
              config.momentum * v.bias[k] - config.learning_rate * g.bias[k];
          p.bias[k] += v.bias[k];
        }
      }
    }
    result.loss_trace.push_back(epoch_loss / batches);
  }
  result.model = std::move(model);
  return result;
}

}  // namespace latentdp
