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

#ifndef LATENTDP_NUMERICS_SYM_EIGEN_H_
#define LATENTDP_NUMERICS_SYM_EIGEN_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace latentdp {

// Dense symmetric matrix, row-major. Symmetry is exact: entry (i, j) and
// entry (j, i) are the same double.
class SymmetricMatrix {
 public:
  // Rejects entries that are not exactly symmetric.
  static absl::StatusOr<SymmetricMatrix> Create(int dim,
                                                std::vector<double> entries);
  // Averages (i, j) with (j, i). For products that are symmetric in exact
  // arithmetic but not after rounding.
  static absl::StatusOr<SymmetricMatrix> Symmetrize(
      int dim, std::vector<double> entries);
  static SymmetricMatrix Identity(int dim);
  static SymmetricMatrix Diagonal(std::span<const double> diagonal);

  int dim() const { return dim_; }
  double at(int i, int j) const { return entries_[index(i, j)]; }
  const std::vector<double>& entries() const { return entries_; }

  double Trace() const;
  double FrobeniusNorm() const;

 private:
  SymmetricMatrix(int dim, std::vector<double> entries)
      : dim_(dim), entries_(std::move(entries)) {}
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(dim_) +
           static_cast<size_t>(j);
  }

  int dim_;
  std::vector<double> entries_;
};

struct EigenDecomposition {
  int dim = 0;
  // Descending.
  std::vector<double> values;
  // Row-major dim x dim; column k is the unit eigenvector for values[k].
  std::vector<double> vectors;

  double vector_entry(int row, int k) const {
    return vectors[static_cast<size_t>(row) * static_cast<size_t>(dim) +
                   static_cast<size_t>(k)];
  }
};

inline constexpr int kMaxEigenDim = 256;

// Cyclic Jacobi rotations until the largest off-diagonal magnitude drops
// below 1e-12 times the Frobenius norm.
absl::StatusOr<EigenDecomposition> SymEigen(const SymmetricMatrix& m);

// V f(diag(lambda)) V^T with f applied to each eigenvalue.
std::vector<double> ComposeFromEigen(const EigenDecomposition& eig,
                                     double (*f)(double));

}  // namespace latentdp

#endif  // LATENTDP_NUMERICS_SYM_EIGEN_H_
