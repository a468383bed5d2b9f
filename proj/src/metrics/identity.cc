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
#include "latentdp/metrics/identity.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "latentdp/base/csv.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {
namespace {

double Mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

double IdentitySimilarity(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.5;
  // sqrt(na * nb) rather than sqrt(na) * sqrt(nb): exact for a == b.
  const double cosine = std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0);
  return (cosine + 1.0) / 2.0;
}

absl::StatusOr<std::vector<std::vector<double>>> IdentityEmbeddings(
    const AutoencoderModel& model, std::span<const Image> images) {
  ASSIGN_OR_RETURN(std::vector<LatentVector> codes, EncodeBatch(model, images));
  std::vector<std::vector<double>> out;
  out.reserve(codes.size());
  for (const LatentVector& z : codes) {
    auto block = z.identity_block();
    out.emplace_back(block.begin(), block.end());
  }
  return out;
}

absl::StatusOr<std::vector<double>> IdentityEmbedding(
    const AutoencoderModel& model, const Image& image) {
  ASSIGN_OR_RETURN(auto out,
                   IdentityEmbeddings(model, std::span<const Image>(&image, 1)));
  return std::move(out.front());
}

absl::StatusOr<double> Iss(const AutoencoderModel& model, const Image& x,
                           const Image& y) {
  ASSIGN_OR_RETURN(std::vector<double> ex, IdentityEmbedding(model, x));
  ASSIGN_OR_RETURN(std::vector<double> ey, IdentityEmbedding(model, y));
  return IdentitySimilarity(ex, ey);
}

absl::StatusOr<std::vector<double>> IssBatch(const AutoencoderModel& model,
                                             std::span<const Image> originals,
                                             std::span<const Image> perturbed) {
  if (originals.size() != perturbed.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pair lists differ in length: ", originals.size(), " vs ",
        perturbed.size()));
  }
  ASSIGN_OR_RETURN(auto ex, IdentityEmbeddings(model, originals));
  ASSIGN_OR_RETURN(auto ey, IdentityEmbeddings(model, perturbed));
  std::vector<double> out(ex.size());
  for (size_t i = 0; i < ex.size(); ++i) out[i] = IdentitySimilarity(ex[i], ey[i]);
  return out;
}

absl::StatusOr<double> FppsrFromScores(std::span<const double> iss, double tau) {
  if (iss.empty()) return absl::InvalidArgumentError("fppsr of no pairs");
  if (!(tau >= 0.0 && tau <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("threshold must be in [0, 1], got ", tau));
  }
  const auto below = std::count_if(iss.begin(), iss.end(),
                                   [tau](double s) { return s < tau; });
  return static_cast<double>(below) / static_cast<double>(iss.size());
}

absl::StatusOr<double> Fppsr(const AutoencoderModel& model,
                             std::span<const Image> originals,
                             std::span<const Image> perturbed, double tau) {
  ASSIGN_OR_RETURN(std::vector<double> scores,
                   IssBatch(model, originals, perturbed));
  return FppsrFromScores(scores, tau);
}

absl::StatusOr<ThresholdCalibration> CalibrateThresholdFromScores(
    std::vector<double> genuine, std::vector<double> impostor,
    double percentile) {
  if (genuine.empty() || impostor.empty()) {
    return absl::InvalidArgumentError(
        "threshold calibration needs genuine and impostor pairs");
  }
  ThresholdCalibration cal;
  cal.percentile = percentile;
  ASSIGN_OR_RETURN(cal.tau, NearestRankPercentile(impostor, percentile));
  const std::vector<double> edges = UniformEdges(0.0, 1.0, 20);
  ASSIGN_OR_RETURN(cal.genuine_histogram, MakeHistogram(genuine, edges));
  ASSIGN_OR_RETURN(cal.impostor_histogram, MakeHistogram(impostor, edges));
  cal.genuine_mean = Mean(genuine);
  cal.impostor_mean = Mean(impostor);
  cal.genuine = std::move(genuine);
  cal.impostor = std::move(impostor);
  return cal;
}

absl::StatusOr<ThresholdCalibration> CalibrateThreshold(
    const AutoencoderModel& model, std::span<const ImagePair> genuine_pairs,
    std::span<const ImagePair> impostor_pairs, double percentile) {
  auto score = [&](std::span<const ImagePair> pairs)
      -> absl::StatusOr<std::vector<double>> {
    std::vector<double> out;
    for (const ImagePair& p : pairs) {
      ASSIGN_OR_RETURN(double s, Iss(model, p.first, p.second));
      out.push_back(s);
    }
    return out;
  };
  ASSIGN_OR_RETURN(std::vector<double> genuine, score(genuine_pairs));
  ASSIGN_OR_RETURN(std::vector<double> impostor, score(impostor_pairs));
  return CalibrateThresholdFromScores(std::move(genuine), std::move(impostor),
                                      percentile);
}

absl::StatusOr<ThresholdCalibration> CalibrateThresholdFromCorpus(
    const AutoencoderModel& model, std::span<const Image> images,
    std::span<const int> labels, double percentile) {
  if (images.size() != labels.size()) {
    return absl::InvalidArgumentError("one label per image required");
  }
  ASSIGN_OR_RETURN(auto emb, IdentityEmbeddings(model, images));
  std::vector<double> genuine;
  std::vector<double> impostor;
  for (size_t i = 0; i < emb.size(); ++i) {
    for (size_t j = i + 1; j < emb.size(); ++j) {
      const double s = IdentitySimilarity(emb[i], emb[j]);
      (labels[i] == labels[j] ? genuine : impostor).push_back(s);
    }
  }
  return CalibrateThresholdFromScores(std::move(genuine), std::move(impostor),
                                      percentile);
}

absl::Status WriteCalibrationCsv(const ThresholdCalibration& calibration,
                                 const std::string& path) {
  CsvTable csv({"kind", "bin_low", "bin_high", "count"});
  auto add = [&](const char* kind, const Histogram& h) -> absl::Status {
    for (size_t i = 0; i < h.counts.size(); ++i) {
      RETURN_IF_ERROR(csv.AddRow({kind, FormatDouble(h.edges[i]),
                                  FormatDouble(h.edges[i + 1]),
                                  absl::StrCat(h.counts[i])}));
    }
    return absl::OkStatus();
  };
  RETURN_IF_ERROR(add("genuine", calibration.genuine_histogram));
  RETURN_IF_ERROR(add("impostor", calibration.impostor_histogram));
  return csv.WriteTo(path);
}

}  // namespace latentdp
