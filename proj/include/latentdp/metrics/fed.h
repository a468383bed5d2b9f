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

// Frechet embedding distance: the Frechet distance between Gaussians fitted
// to two sets of identity embeddings.

#ifndef LATENTDP_METRICS_FED_H_
#define LATENTDP_METRICS_FED_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "latentdp/numerics/sym_eigen.h"

namespace latentdp {

struct EmbeddingGaussian {
  std::vector<double> mean;
  // Unbiased (n - 1) sample covariance.
  SymmetricMatrix covariance = SymmetricMatrix::Identity(1);
};

// Needs at least two vectors, all the same length.
absl::StatusOr<EmbeddingGaussian> FitGaussian(
    std::span<const std::vector<double>> vectors);

// ||mu_a - mu_b||^2 + tr(Sa) + tr(Sb) - 2 tr((Sa^1/2 Sb Sa^1/2)^1/2).
// Square roots go through the symmetric eigensolver with tiny negative
// eigenvalues clamped to zero, so the result can sit a rounding error below
// zero but is otherwise non-negative.
absl::StatusOr<double> FrechetDistance(const EmbeddingGaussian& a,
                                       const EmbeddingGaussian& b);

absl::StatusOr<double> Fed(std::span<const std::vector<double>> a,
                           std::span<const std::vector<double>> b);

}  // namespace latentdp

#endif  // LATENTDP_METRICS_FED_H_
