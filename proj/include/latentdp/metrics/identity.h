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

// Identity similarity through the model's own identity block, standing in
// for a face recognizer: two images look like the same person to the extent
// that the identity blocks of their codes point the same way.

#ifndef LATENTDP_METRICS_IDENTITY_H_
#define LATENTDP_METRICS_IDENTITY_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "latentdp/codec/autoencoder.h"
#include "latentdp/codec/image.h"
#include "latentdp/numerics/stats.h"

namespace latentdp {

// (cos(a, b) + 1) / 2, in [0, 1]; 0.5 when either vector is zero.
double IdentitySimilarity(std::span<const double> a, std::span<const double> b);

absl::StatusOr<std::vector<double>> IdentityEmbedding(
    const AutoencoderModel& model, const Image& image);
absl::StatusOr<std::vector<std::vector<double>>> IdentityEmbeddings(
    const AutoencoderModel& model, std::span<const Image> images);

// Identity similarity score of an (original, perturbed) pair.
absl::StatusOr<double> Iss(const AutoencoderModel& model, const Image& x,
                           const Image& y);
absl::StatusOr<std::vector<double>> IssBatch(const AutoencoderModel& model,
                                             std::span<const Image> originals,
                                             std::span<const Image> perturbed);

// Fraction of scores strictly below tau: pairs a recognizer thresholded at
// tau would call different people.
absl::StatusOr<double> FppsrFromScores(std::span<const double> iss, double tau);
absl::StatusOr<double> Fppsr(const AutoencoderModel& model,
                             std::span<const Image> originals,
                             std::span<const Image> perturbed, double tau);

struct ThresholdCalibration {
  double tau = 0.0;
  double percentile = 95.0;
  std::vector<double> genuine;
  std::vector<double> impostor;
  double genuine_mean = 0.0;
  double impostor_mean = 0.0;
  // 20 equal bins over [0, 1].
  Histogram genuine_histogram;
  Histogram impostor_histogram;
};

// tau is the nearest-rank `percentile` of the impostor scores.
absl::StatusOr<ThresholdCalibration> CalibrateThresholdFromScores(
    std::vector<double> genuine, std::vector<double> impostor,
    double percentile = 95.0);

struct ImagePair {
  Image first;
  Image second;
};

absl::StatusOr<ThresholdCalibration> CalibrateThreshold(
    const AutoencoderModel& model, std::span<const ImagePair> genuine_pairs,
    std::span<const ImagePair> impostor_pairs, double percentile = 95.0);

// Every unordered pair of `images`: same label is genuine, different label
// is impostor.
absl::StatusOr<ThresholdCalibration> CalibrateThresholdFromCorpus(
    const AutoencoderModel& model, std::span<const Image> images,
    std::span<const int> labels, double percentile = 95.0);

// CSV `kind,bin_low,bin_high,count` for both score histograms.
absl::Status WriteCalibrationCsv(const ThresholdCalibration& calibration,
                                 const std::string& path);

}  // namespace latentdp

#endif  // LATENTDP_METRICS_IDENTITY_H_
