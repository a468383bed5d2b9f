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
#include "latentdp/metrics/fed.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {
namespace {

double ClampedSqrt(double v) { return std::sqrt(std::max(v, 0.0)); }

// Row-major dense product of two dim x dim matrices.
std::vector<double> MatMul(int dim, const std::vector<double>& a,
                           const std::vector<double>& b) {
  const size_t n = static_cast<size_t>(dim);
  std::vector<double> c(n * n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      for (size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  }
  return c;
}

}  // namespace

absl::StatusOr<EmbeddingGaussian> FitGaussian(
    std::span<const std::vector<double>> vectors) {
  if (vectors.size() < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "covariance needs at least 2 embeddings, got ", vectors.size()));
  }
  const size_t d = vectors.front().size();
  if (d == 0) return absl::InvalidArgumentError("empty embeddings");
  for (const auto& v : vectors) {
    if (v.size() != d) {
      return absl::InvalidArgumentError(absl::StrCat(
          "embedding length mismatch: ", v.size(), " vs ", d));
    }
  }
  const double n = static_cast<double>(vectors.size());
  std::vector<double> mean(d, 0.0);
  for (const auto& v : vectors) {
    for (size_t i = 0; i < d; ++i) mean[i] += v[i];
  }
  for (double& m : mean) m /= n;
  // Fill the upper triangle and mirror it so the matrix is exactly symmetric.
  std::vector<double> cov(d * d, 0.0);
  for (const auto& v : vectors) {
    for (size_t i = 0; i < d; ++i) {
      const double di = v[i] - mean[i];
      for (size_t j = i; j < d; ++j) cov[i * d + j] += di * (v[j] - mean[j]);
    }
  }
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i; j < d; ++j) {
      cov[i * d + j] /= n - 1.0;
      cov[j * d + i] = cov[i * d + j];
    }
  }
  ASSIGN_OR_RETURN(SymmetricMatrix sigma,
                   SymmetricMatrix::Create(static_cast<int>(d), std::move(cov)));
  return EmbeddingGaussian{std::move(mean), std::move(sigma)};
}

absl::StatusOr<double> FrechetDistance(const EmbeddingGaussian& a,
                                       const EmbeddingGaussian& b) {
  const int dim = a.covariance.dim();
  if (b.covariance.dim() != dim || a.mean.size() != b.mean.size() ||
      a.mean.size() != static_cast<size_t>(dim)) {
    return absl::InvalidArgumentError("gaussians differ in dimension");
  }
  double mean_term = 0.0;
  for (size_t i = 0; i < a.mean.size(); ++i) {
    const double d = a.mean[i] - b.mean[i];
    mean_term += d * d;
  }
  ASSIGN_OR_RETURN(EigenDecomposition eig_a, SymEigen(a.covariance));
  ASSIGN_OR_RETURN(SymmetricMatrix root_a,
                   SymmetricMatrix::Symmetrize(
                       dim, ComposeFromEigen(eig_a, &ClampedSqrt)));
  const std::vector<double> inner = MatMul(
      dim, MatMul(dim, root_a.entries(), b.covariance.entries()),
      root_a.entries());
  ASSIGN_OR_RETURN(SymmetricMatrix product,
                   SymmetricMatrix::Symmetrize(dim, inner));
  ASSIGN_OR_RETURN(EigenDecomposition eig_p, SymEigen(product));
  double trace_root = 0.0;
  for (double lambda : eig_p.values) trace_root += ClampedSqrt(lambda);
  return mean_term + a.covariance.Trace() + b.covariance.Trace() -
         2.0 * trace_root;
}

absl::StatusOr<double> Fed(std::span<const std::vector<double>> a,
                           std::span<const std::vector<double>> b) {
  ASSIGN_OR_RETURN(EmbeddingGaussian ga, FitGaussian(a));
  ASSIGN_OR_RETURN(EmbeddingGaussian gb, FitGaussian(b));
  return FrechetDistance(ga, gb);
}

}  // namespace latentdp
