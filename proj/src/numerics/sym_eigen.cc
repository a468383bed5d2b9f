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
#include "latentdp/numerics/sym_eigen.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace latentdp {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeTolerance = 1e-12;

absl::Status CheckShape(int dim, size_t size) {
  if (dim < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("matrix dim must be >= 1, got ", dim));
  }
  if (size != static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected ", dim * dim, " entries for dim ", dim, ", got ", size));
  }
  return absl::OkStatus();
}

double MaxOffDiagonal(const std::vector<double>& a, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      worst = std::max(worst, std::abs(a[static_cast<size_t>(i * n + j)]));
    }
  }
  return worst;
}

}  // namespace

absl::StatusOr<SymmetricMatrix> SymmetricMatrix::Create(
    int dim, std::vector<double> entries) {
  if (auto s = CheckShape(dim, entries.size()); !s.ok()) return s;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if (entries[static_cast<size_t>(i * dim + j)] !=
          entries[static_cast<size_t>(j * dim + i)]) {
        return absl::InvalidArgumentError(
            absl::StrCat("matrix is not symmetric at (", i, ", ", j, ")"));
      }
    }
  }
  return SymmetricMatrix(dim, std::move(entries));
}

absl::StatusOr<SymmetricMatrix> SymmetricMatrix::Symmetrize(
    int dim, std::vector<double> entries) {
  if (auto s = CheckShape(dim, entries.size()); !s.ok()) return s;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      double& upper = entries[static_cast<size_t>(i * dim + j)];
      double& lower = entries[static_cast<size_t>(j * dim + i)];
      const double mean = 0.5 * (upper + lower);
      upper = mean;
      lower = mean;
    }
  }
  return SymmetricMatrix(dim, std::move(entries));
}

SymmetricMatrix SymmetricMatrix::Identity(int dim) {
  std::vector<double> d(static_cast<size_t>(dim), 1.0);
  return Diagonal(d);
}

SymmetricMatrix SymmetricMatrix::Diagonal(std::span<const double> diagonal) {
  const int dim = static_cast<int>(diagonal.size());
  std::vector<double> entries(diagonal.size() * diagonal.size(), 0.0);
  for (int i = 0; i < dim; ++i) {
    entries[static_cast<size_t>(i * dim + i)] = diagonal[static_cast<size_t>(i)];
  }
  return SymmetricMatrix(dim, std::move(entries));
}

double SymmetricMatrix::Trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double SymmetricMatrix::FrobeniusNorm() const {
  double s = 0.0;
  for (double v : entries_) s += v * v;
  return std::sqrt(s);
}

absl::StatusOr<EigenDecomposition> SymEigen(const SymmetricMatrix& m) {
  const int n = m.dim();
  if (n > kMaxEigenDim) {
    return absl::InvalidArgumentError(
        absl::StrCat("SymEigen supports dim <= ", kMaxEigenDim, ", got ", n));
  }
  std::vector<double> a = m.entries();
  std::vector<double> v(a.size(), 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i * n + i)] = 1.0;
  auto at = [n](std::vector<double>& x, int i, int j) -> double& {
    return x[static_cast<size_t>(i * n + j)];
  };

  const double threshold = kRelativeTolerance * m.FrobeniusNorm();
  int sweep = 0;
  while (MaxOffDiagonal(a, n) >= threshold && threshold > 0.0) {
    if (++sweep > kMaxSweeps) {
      return absl::InternalError(
          absl::StrCat("Jacobi did not converge in ", kMaxSweeps, " sweeps"));
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- J^T A J, columns first then rows.
        for (int k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return at(a, x, x) > at(a, y, y);
  });
  EigenDecomposition out;
  out.dim = n;
  out.values.resize(static_cast<size_t>(n));
  out.vectors.resize(a.size());
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<size_t>(k)];
    out.values[static_cast<size_t>(k)] = at(a, src, src);
    for (int row = 0; row < n; ++row) {
      out.vectors[static_cast<size_t>(row * n + k)] = at(v, row, src);
    }
  }
  return out;
}

std::vector<double> ComposeFromEigen(const EigenDecomposition& eig,
                                     double (*f)(double)) {
  const int n = eig.dim;
  std::vector<double> fl(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) fl[static_cast<size_t>(k)] = f(eig.values[static_cast<size_t>(k)]);
  std::vector<double> out(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += eig.vector_entry(i, k) * fl[static_cast<size_t>(k)] *
             eig.vector_entry(j, k);
      }
      out[static_cast<size_t>(i * n + j)] = s;
    }
  }
  return out;
}

}  // namespace latentdp
