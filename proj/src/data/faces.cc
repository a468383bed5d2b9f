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
#include "latentdp/data/faces.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "latentdp/base/status_macros.h"
#include "latentdp/numerics/sampling.h"

namespace latentdp {
namespace {

constexpr double kBackground = 0.15;
constexpr double kSkin = 0.75;
constexpr double kEye = 0.1;
constexpr double kMouth = 0.2;
constexpr double kEyeSemiX = 0.06;
constexpr double kEyeSemiY = 0.045;
constexpr double kMouthBaseline = 0.18;
constexpr double kMouthHalfThickness = 0.03;

// Task tags keep the identity draws and the per-image draws on separate
// streams.
constexpr uint64_t kIdentityTag = 101;
constexpr uint64_t kSampleTag = 102;
constexpr int kMaxRejections = 10000;

absl::Status CheckRange(const char* name, double v, ParamRange r) {
  if (!(v >= r.lo && v <= r.hi)) {
    return absl::InvalidArgumentError(absl::StrCat(
        name, " = ", v, " outside [", r.lo, ", ", r.hi, "]"));
  }
  return absl::OkStatus();
}

double Uniform(RngStream& s, ParamRange r) {
  return r.lo + (s.UniformOpen() + 0.5) * (r.hi - r.lo);
}

double Scaled(double a, double b, ParamRange r) {
  return (a - b) / (r.hi - r.lo);
}

// Intensity at a point (u, v) in side units relative to the face center.
double Shade(const FaceIdentity& id, double u, double v) {
  const double hu = u / id.face_width;
  const double hv = v / id.face_height;
  double value = hu * hu + hv * hv <= 1.0 ? kSkin : kBackground;
  const double ex = (std::abs(u) - id.eye_spacing) / kEyeSemiX;
  const double ey = (v - id.eye_height) / kEyeSemiY;
  if (ex * ex + ey * ey <= 1.0) value = kEye;
  const double t = u / id.mouth_width;
  if (std::abs(t) <= 1.0) {
    const double arc = kMouthBaseline + id.mouth_curve * (1.0 - t * t);
    if (std::abs(v - arc) <= kMouthHalfThickness) value = kMouth;
  }
  return value;
}

}  // namespace

absl::Status ValidateFaceParams(const FaceParams& params) {
  const FaceIdentity& id = params.identity;
  RETURN_IF_ERROR(CheckRange("face_width", id.face_width, kFaceWidthRange));
  RETURN_IF_ERROR(CheckRange("face_height", id.face_height, kFaceHeightRange));
  RETURN_IF_ERROR(CheckRange("eye_spacing", id.eye_spacing, kEyeSpacingRange));
  RETURN_IF_ERROR(CheckRange("eye_height", id.eye_height, kEyeHeightRange));
  RETURN_IF_ERROR(CheckRange("mouth_width", id.mouth_width, kMouthWidthRange));
  RETURN_IF_ERROR(CheckRange("mouth_curve", id.mouth_curve, kMouthCurveRange));
  const FaceNuisance& n = params.nuisance;
  const ParamRange jitter{-kMaxJitterPx, kMaxJitterPx};
  RETURN_IF_ERROR(CheckRange("jitter dx", n.dx, jitter));
  RETURN_IF_ERROR(CheckRange("jitter dy", n.dy, jitter));
  RETURN_IF_ERROR(
      CheckRange("brightness", n.brightness, {-kMaxBrightness, kMaxBrightness}));
  RETURN_IF_ERROR(CheckRange("noise_std", n.noise_std, {0.0, kMaxNoiseStd}));
  return absl::OkStatus();
}

absl::StatusOr<Image> RenderFace(const FaceParams& params, int side,
                                 RngStream& noise) {
  if (side < kMinFaceSide) {
    return absl::InvalidArgumentError(
        absl::StrCat("face side must be >= ", kMinFaceSide, ", got ", side));
  }
  RETURN_IF_ERROR(ValidateFaceParams(params));
  const double s = static_cast<double>(side);
  const double cx = s / 2.0 + params.nuisance.dx;
  const double cy = s / 2.0 + params.nuisance.dy;
  static constexpr double kOffsets[2] = {0.25, 0.75};
  std::vector<double> pixels(static_cast<size_t>(side) *
                             static_cast<size_t>(side));
  for (int row = 0; row < side; ++row) {
    for (int col = 0; col < side; ++col) {
      double acc = 0.0;
      for (double oy : kOffsets) {
        for (double ox : kOffsets) {
          acc += Shade(params.identity, (col + ox - cx) / s,
                       (row + oy - cy) / s);
        }
      }
      double value = acc / 4.0 + params.nuisance.brightness;
      if (params.nuisance.noise_std > 0.0) {
        ASSIGN_OR_RETURN(double n,
                         GaussianSample(noise, 0.0, params.nuisance.noise_std));
        value += n;
      }
      pixels[static_cast<size_t>(row) * static_cast<size_t>(side) +
             static_cast<size_t>(col)] = value;
    }
  }
  return Image::FromClamped(side, side, std::move(pixels));
}

FaceIdentity SampleIdentity(RngStream& stream) {
  FaceIdentity id;
  id.face_width = Uniform(stream, kFaceWidthRange);
  id.face_height = Uniform(stream, kFaceHeightRange);
  id.eye_spacing = Uniform(stream, kEyeSpacingRange);
  id.eye_height = Uniform(stream, kEyeHeightRange);
  id.mouth_width = Uniform(stream, kMouthWidthRange);
  id.mouth_curve = Uniform(stream, kMouthCurveRange);
  return id;
}

FaceNuisance SampleNuisance(RngStream& stream, double jitter_px,
                            double noise_std) {
  FaceNuisance n;
  n.dx = Uniform(stream, {-jitter_px, jitter_px});
  n.dy = Uniform(stream, {-jitter_px, jitter_px});
  n.brightness = Uniform(stream, {-kMaxBrightness, kMaxBrightness});
  n.noise_std = noise_std;
  return n;
}

double IdentityDistance(const FaceIdentity& a, const FaceIdentity& b) {
  const double d[] = {
      Scaled(a.face_width, b.face_width, kFaceWidthRange),
      Scaled(a.face_height, b.face_height, kFaceHeightRange),
      Scaled(a.eye_spacing, b.eye_spacing, kEyeSpacingRange),
      Scaled(a.eye_height, b.eye_height, kEyeHeightRange),
      Scaled(a.mouth_width, b.mouth_width, kMouthWidthRange),
      Scaled(a.mouth_curve, b.mouth_curve, kMouthCurveRange)};
  double sum = 0.0;
  for (double x : d) sum += x * x;
  return std::sqrt(sum);
}

absl::Status CorpusOptions::Validate() const {
  if (n_identities < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("n_identities must be >= 2, got ", n_identities));
  }
  if (samples_per_identity < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "samples_per_identity must be >= 1, got ", samples_per_identity));
  }
  if (eval_per_identity < 0 || eval_per_identity > samples_per_identity) {
    return absl::InvalidArgumentError(absl::StrCat(
        "eval_per_identity must be in [0, samples_per_identity], got ",
        eval_per_identity));
  }
  if (side < kMinFaceSide) {
    return absl::InvalidArgumentError(
        absl::StrCat("image_side must be >= ", kMinFaceSide, ", got ", side));
  }
  if (!(jitter_px >= 0.0 && jitter_px <= kMaxJitterPx)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "jitter_px must be in [0, ", kMaxJitterPx, "], got ", jitter_px));
  }
  if (!(noise_std >= 0.0 && noise_std <= kMaxNoiseStd)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "noise_std must be in [0, ", kMaxNoiseStd, "], got ", noise_std));
  }
  if (!(min_identity_separation >= 0.0)) {
    return absl::InvalidArgumentError("min_identity_separation must be >= 0");
  }
  return absl::OkStatus();
}

absl::StatusOr<Corpus> GenerateCorpus(const CorpusOptions& options) {
  RETURN_IF_ERROR(options.Validate());
  Corpus corpus;
  RngStream id_stream(options.seed, TaskId(kIdentityTag, 0));
  int rejections = 0;
  while (static_cast<int>(corpus.identities.size()) < options.n_identities) {
    const FaceIdentity candidate = SampleIdentity(id_stream);
    double nearest = std::numeric_limits<double>::infinity();
    for (const FaceIdentity& other : corpus.identities) {
      nearest = std::min(nearest, IdentityDistance(candidate, other));
    }
    // Strictly positive separation is what makes same-identity pairs closer
    // in parameter space than every cross-identity pair.
    if (nearest > options.min_identity_separation && nearest > 0.0) {
      corpus.identities.push_back(candidate);
    } else if (++rejections > kMaxRejections) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "could not place ", options.n_identities,
          " identities at separation ", options.min_identity_separation));
    }
  }
  const int first_eval = options.samples_per_identity - options.eval_per_identity;
  for (int id = 0; id < options.n_identities; ++id) {
    for (int j = 0; j < options.samples_per_identity; ++j) {
      RngStream stream(options.seed, TaskId(kSampleTag, static_cast<uint64_t>(id),
                                            static_cast<uint64_t>(j)));
      FaceSample sample;
      sample.identity_id = id;
      sample.sample_index = j;
      sample.split = j >= first_eval ? Split::kEval : Split::kTrain;
      sample.params.identity = corpus.identities[static_cast<size_t>(id)];
      sample.params.nuisance =
          SampleNuisance(stream, options.jitter_px, options.noise_std);
      ASSIGN_OR_RETURN(sample.image,
                       RenderFace(sample.params, options.side, stream));
      corpus.samples.push_back(std::move(sample));
    }
  }
  return corpus;
}

}  // namespace latentdp
