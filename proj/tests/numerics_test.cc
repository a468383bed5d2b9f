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
#include <cmath>
#include <numbers>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "latentdp/numerics/rng.h"
#include "latentdp/numerics/sampling.h"
#include "latentdp/numerics/stats.h"
#include "latentdp/numerics/sym_eigen.h"
#include "latentdp/privacy/laplace.h"

namespace latentdp {
namespace {

// Reference outputs of the splitmix64 recurrence, computed outside this
// code base.
TEST(RngStreamTest, MatchesReferenceSequenceForSeedZero) {
  RngStream s(0);
  EXPECT_EQ(s.NextU64(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(s.NextU64(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(s.NextU64(), 0x06c45d188009454fULL);
}

TEST(RngStreamTest, DistinctSeedsMatchReference) {
  RngStream a(1), b(2);
  const uint64_t va = a.NextU64();
  const uint64_t vb = b.NextU64();
  EXPECT_EQ(va, 0x910a2dec89025cc1ULL);
  EXPECT_EQ(vb, 0x975835de1c9756ceULL);
  EXPECT_NE(va, vb);
}

TEST(RngStreamTest, SameSeedIsDeterministic) {
  RngStream a(42), b(42);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.NextU64(), b.NextU64()) << i;
}

TEST(RngStreamTest, CopyForksIdenticalSequence) {
  RngStream a(7, 3);
  a.NextU64();
  RngStream b = a;
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngStreamTest, StreamIdsDiverge) {
  RngStream a(9, 1), b(9, 2), c(9, 0);
  const uint64_t x = a.NextU64(), y = b.NextU64(), z = c.NextU64();
  EXPECT_NE(x, y);
  EXPECT_NE(x, z);
  EXPECT_NE(y, z);
}

TEST(RngStreamTest, TaskIdsAreDistinct) {
  EXPECT_NE(TaskId(1, 2, 3), TaskId(1, 3, 2));
  EXPECT_NE(TaskId(0, 0, 0), TaskId(0, 0, 1));
  EXPECT_EQ(TaskId(5, 6, 7), TaskId(5, 6, 7));
}

TEST(UniformOpenTest, RangeAndMoments) {
  RngStream s(123);
  constexpr int kN = 1000000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double v = s.UniformOpen();
    ASSERT_GT(v, -0.5);
    ASSERT_LE(v, 0.5);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / kN;
  const double var = sum_sq / kN - mean * mean;
  EXPECT_LT(std::abs(mean), 0.002);
  EXPECT_NEAR(var, 1.0 / 12.0, 0.02 / 12.0);
}

TEST(GaussianSampleTest, ZeroStdReturnsMeanExactly) {
  RngStream s(1);
  auto v = GaussianSample(s, 5.0, 0.0);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(*v, 5.0);
}

TEST(GaussianSampleTest, ZeroStdStillConsumesTwoDraws) {
  RngStream a(1), b(1);
  ASSERT_TRUE(GaussianSample(a, 0.0, 0.0).ok());
  b.NextU64();
  b.NextU64();
  EXPECT_EQ(a, b);
}

TEST(GaussianSampleTest, RejectsNegativeStd) {
  RngStream s(1);
  EXPECT_EQ(GaussianSample(s, 0.0, -1.0).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(GaussianSampleTest, Moments) {
  RngStream s(77);
  constexpr int kN = 1000000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double v = *GaussianSample(s, 0.0, 1.0);
    ASSERT_TRUE(std::isfinite(v));
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / kN;
  EXPECT_LT(std::abs(mean), 0.004);
  EXPECT_NEAR(sum_sq / kN - mean * mean, 1.0, 0.02);
}

TEST(DescribeTest, BasicStats) {
  const std::vector<double> v = {1, 2, 3};
  const std::vector<double> edges = {0, 4};
  auto d = Describe(v, edges);
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->min, 1);
  EXPECT_EQ(d->max, 3);
  EXPECT_EQ(d->mean, 2);
}

TEST(DescribeTest, ConstantValuesLandInOneBin) {
  const std::vector<double> v = {5, 5, 5, 5};
  const std::vector<double> edges = {0, 2, 4, 6, 8};
  auto d = Describe(v, edges);
  ASSERT_TRUE(d.ok());
  EXPECT_THAT(d->histogram.counts, ::testing::ElementsAre(0, 0, 4, 0));
}

TEST(DescribeTest, EmptyRejected) {
  const std::vector<double> edges = {0, 1};
  EXPECT_FALSE(Describe({}, edges).ok());
}

TEST(HistogramTest, CountsPartitionInput) {
  const std::vector<double> v = {-1, 0, 0.5, 1, 1.5, 2, 3};
  const std::vector<double> edges = {0, 1, 2};
  auto h = MakeHistogram(v, edges);
  ASSERT_TRUE(h.ok());
  // [0,1) holds 0 and 0.5; the last bin is closed and holds 1, 1.5 and 2.
  EXPECT_THAT(h->counts, ::testing::ElementsAre(2, 3));
  EXPECT_EQ(h->underflow, 1);
  EXPECT_EQ(h->overflow, 1);
  EXPECT_EQ(h->total(), static_cast<int64_t>(v.size()));
}

TEST(HistogramTest, RejectsNonIncreasingEdges) {
  const std::vector<double> v = {1};
  const std::vector<double> edges = {0, 1, 1};
  EXPECT_FALSE(MakeHistogram(v, edges).ok());
}

TEST(DescribeTest, LaplaceDrawsHaveNearZeroMean) {
  RngStream s(5);
  std::vector<double> v;
  for (int i = 0; i < 10000; ++i) v.push_back(*LaplaceSample(s, 1.0));
  const std::vector<double> edges = UniformEdges(-10, 10, 20);
  auto d = Describe(v, edges);
  ASSERT_TRUE(d.ok());
  EXPECT_LT(std::abs(d->mean), 0.05);
}

TEST(PercentileTest, NearestRankOnGrid) {
  std::vector<double> grid;
  for (int i = 0; i < 100; ++i) grid.push_back(i / 100.0);
  // ceil(0.95 * 100) = 95th smallest, 1-based.
  EXPECT_DOUBLE_EQ(*NearestRankPercentile(grid, 95), 0.94);
  EXPECT_DOUBLE_EQ(*NearestRankPercentile(grid, 0), 0.0);
  EXPECT_DOUBLE_EQ(*NearestRankPercentile(grid, 100), 0.99);
  const std::vector<double> five = {3, 1, 5, 2, 4};
  EXPECT_DOUBLE_EQ(*NearestRankPercentile(five, 50), 3);
  EXPECT_FALSE(NearestRankPercentile({}, 50).ok());
}

std::vector<double> Reconstruct(const EigenDecomposition& e) {
  const int n = e.dim;
  std::vector<double> out(static_cast<size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        acc += e.vector_entry(i, k) * e.values[k] * e.vector_entry(j, k);
      }
      out[static_cast<size_t>(i * n + j)] = acc;
    }
  }
  return out;
}

TEST(SymEigenTest, IdentityHasUnitEigenvalues) {
  auto e = SymEigen(SymmetricMatrix::Identity(3));
  ASSERT_TRUE(e.ok());
  EXPECT_THAT(e->values, ::testing::ElementsAre(1.0, 1.0, 1.0));
}

TEST(SymEigenTest, DiagonalIsAxisAligned) {
  const std::vector<double> d = {1.0, 4.0};
  auto e = SymEigen(SymmetricMatrix::Diagonal(d));
  ASSERT_TRUE(e.ok());
  EXPECT_THAT(e->values, ::testing::ElementsAre(4.0, 1.0));
  EXPECT_DOUBLE_EQ(std::abs(e->vector_entry(1, 0)), 1.0);
  EXPECT_DOUBLE_EQ(std::abs(e->vector_entry(0, 1)), 1.0);
  EXPECT_EQ(e->vector_entry(0, 0), 0.0);
}

TEST(SymEigenTest, RejectsAsymmetric) {
  auto m = SymmetricMatrix::Create(2, {1.0, 2.0, 2.0 + 1e-15, 1.0});
  EXPECT_EQ(m.status().code(), absl::StatusCode::kInvalidArgument);
}

// Second-difference matrix: eigenvalues 2 - 2 cos(k pi / (n + 1)).
TEST(SymEigenTest, TridiagonalMatchesClosedForm) {
  constexpr int kN = 12;
  std::vector<double> m(kN * kN, 0.0);
  for (int i = 0; i < kN; ++i) {
    m[i * kN + i] = 2.0;
    if (i + 1 < kN) m[i * kN + i + 1] = m[(i + 1) * kN + i] = -1.0;
  }
  auto e = SymEigen(*SymmetricMatrix::Create(kN, m));
  ASSERT_TRUE(e.ok());
  for (int k = 1; k <= kN; ++k) {
    const double expected =
        2.0 - 2.0 * std::cos((kN + 1 - k) * std::numbers::pi / (kN + 1));
    EXPECT_NEAR(e->values[k - 1], expected, 1e-12);
  }
}

TEST(SymEigenTest, RandomMatrixReconstructsAndIsOrthonormal) {
  constexpr int kN = 8;
  RngStream s(2024);
  std::vector<double> m(kN * kN);
  for (int i = 0; i < kN; ++i) {
    for (int j = i; j < kN; ++j) m[i * kN + j] = m[j * kN + i] = s.UniformOpen();
  }
  const SymmetricMatrix sm = *SymmetricMatrix::Create(kN, m);
  auto e = SymEigen(sm);
  ASSERT_TRUE(e.ok());
  const std::vector<double> r = Reconstruct(*e);
  double err = 0.0;
  for (size_t i = 0; i < r.size(); ++i) err += (r[i] - m[i]) * (r[i] - m[i]);
  EXPECT_LT(std::sqrt(err), 1e-9);
  double sum = 0.0;
  for (double v : e->values) sum += v;
  EXPECT_NEAR(sum, sm.Trace(), 1e-9);
  for (int a = 0; a < kN; ++a) {
    EXPECT_GE(a == 0 ? 1e300 : e->values[a - 1], e->values[a]);
    for (int b = 0; b < kN; ++b) {
      double dot = 0.0;
      for (int i = 0; i < kN; ++i) dot += e->vector_entry(i, a) * e->vector_entry(i, b);
      EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-9);
    }
  }
}

TEST(SymEigenTest, ComposeSquareRootSquaresBack) {
  const std::vector<double> m = {4, 1, 1, 3};
  auto e = SymEigen(*SymmetricMatrix::Create(2, m));
  ASSERT_TRUE(e.ok());
  const std::vector<double> r =
      ComposeFromEigen(*e, [](double v) { return std::sqrt(v); });
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double sq = r[i * 2] * r[j] + r[i * 2 + 1] * r[2 + j];
      EXPECT_NEAR(sq, m[i * 2 + j], 1e-12);
    }
  }
}

TEST(SymEigenTest, RejectsOversizedMatrix) {
  EXPECT_FALSE(SymEigen(SymmetricMatrix::Identity(kMaxEigenDim + 1)).ok());
}

}  // namespace
}  // namespace latentdp
