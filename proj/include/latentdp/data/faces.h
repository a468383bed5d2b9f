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

// Parameterized toy faces with ground-truth identities.
//
// A face is an elliptical head, two elliptical eyes and an arc mouth. The
// six identity parameters fix the geometry; nuisance parameters (a sub-pixel
// shift of the whole face, a brightness offset and additive Gaussian pixel
// noise) vary from sample to sample. All geometry is in units of the image
// side, measured from the image center.

#ifndef LATENTDP_DATA_FACES_H_
#define LATENTDP_DATA_FACES_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "latentdp/codec/image.h"
#include "latentdp/numerics/rng.h"

namespace latentdp {

struct ParamRange {
  double lo;
  double hi;
};

struct FaceIdentity {
  double face_width = 0.32;    // head semi-axis, x
  double face_height = 0.38;   // head semi-axis, y
  double eye_spacing = 0.12;   // eye center offset from the midline
  double eye_height = -0.08;   // eye center offset from the face center
  double mouth_width = 0.12;   // arc half-width
  double mouth_curve = 0.0;    // arc sag; positive smiles

  friend bool operator==(const FaceIdentity&, const FaceIdentity&) = default;
};

inline constexpr ParamRange kFaceWidthRange{0.22, 0.42};
inline constexpr ParamRange kFaceHeightRange{0.30, 0.46};
inline constexpr ParamRange kEyeSpacingRange{0.07, 0.20};
inline constexpr ParamRange kEyeHeightRange{-0.16, -0.02};
inline constexpr ParamRange kMouthWidthRange{0.06, 0.20};
inline constexpr ParamRange kMouthCurveRange{-0.08, 0.08};

inline constexpr double kMaxJitterPx = 2.0;
inline constexpr double kMaxBrightness = 0.05;
inline constexpr double kMaxNoiseStd = 0.02;

struct FaceNuisance {
  double dx = 0.0;          // pixels, |dx| <= kMaxJitterPx
  double dy = 0.0;          // pixels
  double brightness = 0.0;  // |brightness| <= kMaxBrightness
  double noise_std = 0.0;   // in [0, kMaxNoiseStd]

  friend bool operator==(const FaceNuisance&, const FaceNuisance&) = default;
};

struct FaceParams {
  FaceIdentity identity;
  FaceNuisance nuisance;
};

absl::Status ValidateFaceParams(const FaceParams& params);

inline constexpr int kMinFaceSide = 16;

// 2x2 supersampled raster; pixel noise is drawn from `noise` (one Gaussian
// pair per pixel when noise_std > 0, none otherwise). Output is clamped to
// [0, 1].
absl::StatusOr<Image> RenderFace(const FaceParams& params, int side,
                                 RngStream& noise);

// Uniform over the documented ranges.
FaceIdentity SampleIdentity(RngStream& stream);
FaceNuisance SampleNuisance(RngStream& stream, double jitter_px,
                            double noise_std);

// Euclidean distance after scaling each parameter by its range width.
double IdentityDistance(const FaceIdentity& a, const FaceIdentity& b);

enum class Split { kTrain, kEval };

struct CorpusOptions {
  int n_identities = 50;
  int samples_per_identity = 10;
  // The last `eval_per_identity` samples of each identity form the eval
  // split.
  int eval_per_identity = 2;
  int side = 32;
  uint64_t seed = 1;
  double jitter_px = 1.0;
  double noise_std = 0.01;
  // Identities closer than this (in IdentityDistance) are resampled.
  double min_identity_separation = 0.15;

  absl::Status Validate() const;
};

struct FaceSample {
  Image image;
  int identity_id = 0;
  int sample_index = 0;
  Split split = Split::kTrain;
  FaceParams params;
};

struct Corpus {
  std::vector<FaceIdentity> identities;
  // Identity-major: all samples of identity 0, then identity 1, ...
  std::vector<FaceSample> samples;
};

// A pure function of `options`.
absl::StatusOr<Corpus> GenerateCorpus(const CorpusOptions& options);

}  // namespace latentdp

#endif  // LATENTDP_DATA_FACES_H_
