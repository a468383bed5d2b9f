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
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "latentdp/base/csv.h"
#include "latentdp/codec/autoencoder.h"
#include "latentdp/metrics/baselines.h"
#include "latentdp/metrics/distortion.h"
#include "latentdp/metrics/fed.h"
#include "latentdp/metrics/identity.h"
#include "latentdp/metrics/report.h"
#include "latentdp/metrics/ssim.h"
#include "latentdp/numerics/rng.h"
#include "latentdp/numerics/sampling.h"

namespace latentdp {
namespace {

Image FromFormula(int side, double (*f)(double, double)) {
  std::vector<double> p;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) p.push_back(f(r, c));
  }
  return Image::FromClamped(side, side, std::move(p));
}

Image RandomImage(int side, uint64_t seed) {
  RngStream s(seed);
  std::vector<double> p(static_cast<size_t>(side * side));
  for (double& v : p) v = s.UniformOpen() + 0.5;
  return *Image::Create(side, side, std::move(p));
}

TEST(L2Test, Examples) {
  const Image x = RandomImage(32, 1);
  EXPECT_EQ(*L2Distance(x, x), 0.0);
  EXPECT_DOUBLE_EQ(
      *L2Distance(Image::Filled(32, 32, 0.0), Image::Filled(32, 32, 1.0)), 32.0);
  EXPECT_FALSE(L2Distance(x, RandomImage(16, 1)).ok());
}

TEST(L2Test, SymmetricAndTriangle) {
  for (uint64_t s = 0; s < 20; ++s) {
    const Image a = RandomImage(16, 3 * s), b = RandomImage(16, 3 * s + 1),
                c = RandomImage(16, 3 * s + 2);
    EXPECT_EQ(*L2Distance(a, b), *L2Distance(b, a));
    EXPECT_LE(*L2Distance(a, c), *L2Distance(a, b) + *L2Distance(b, c) + 1e-12);
  }
}

TEST(AldTest, Examples) {
  const Image x = Image::Filled(32, 32, 0.25);
  const Image twice = Image::Filled(32, 32, 0.5);
  EXPECT_EQ(*AverageLpDistortion(x, x, NormOrder::Infinity()), 0.0);
  for (int p : {1, 2, 3}) {
    EXPECT_NEAR(*AverageLpDistortion(x, twice, *NormOrder::Of(p)), 1.0, 1e-12);
  }
  EXPECT_DOUBLE_EQ(*AverageLpDistortion(twice, Image::Filled(32, 32, 0.75),
                                        NormOrder::Infinity()),
                   0.5);
  EXPECT_FALSE(AverageLpDistortion(Image::Filled(4, 4, 0.0), x,
                                   NormOrder::Infinity())
                   .ok());
  EXPECT_FALSE(NormOrder::Of(0).ok());
}

TEST(SsimTest, IdenticalIsOne) {
  const Image x = RandomImage(32, 5);
  EXPECT_NEAR(*Ssim(x, x), 1.0, 1e-12);
}

TEST(SsimTest, ConstantImagesClosedForm) {
  const double expected = (2 * 0.125 + 1e-4) / (0.3125 + 1e-4);
  EXPECT_NEAR(*Ssim(Image::Filled(32, 32, 0.5), Image::Filled(32, 32, 0.25)),
              expected, 1e-12);
  EXPECT_NEAR(expected, 0.80006, 1e-5);
}

TEST(SsimTest, SymmetricAndBounded) {
  for (uint64_t s = 0; s < 10; ++s) {
    const Image a = RandomImage(24, 2 * s), b = RandomImage(24, 2 * s + 1);
    const double ab = *Ssim(a, b);
    EXPECT_EQ(ab, *Ssim(b, a));
    EXPECT_LE(ab, 1.0);
  }
}

TEST(SsimTest, RejectsSmallOrMismatched) {
  EXPECT_FALSE(Ssim(Image::Filled(10, 10, 0.5), Image::Filled(10, 10, 0.5)).ok());
  EXPECT_FALSE(Ssim(Image::Filled(16, 16, 0.5), Image::Filled(12, 16, 0.5)).ok());
}

// Reference values from scikit-image's structural_similarity with
// gaussian_weights=True, sigma=1.5, use_sample_covariance=False,
// data_range=1, whose cropped mean covers exactly the valid 11x11 windows.
TEST(SsimTest, MatchesReferenceImplementation) {
  const Image x = FromFormula(32, [](double r, double c) {
    return (std::sin(r * 0.7) + std::cos(c * 1.3) + 2) / 4;
  });
  const Image y = FromFormula(32, [](double r, double c) {
    return std::fmod(r * 31 + c * 17, 97) / 96;
  });
  const Image z = FromFormula(32, [](double r, double c) {
    return (std::sin(r * 0.7) + std::cos(c * 1.3) + 2) / 4 +
           0.1 * std::sin(r * c * 0.05);
  });
  EXPECT_NEAR(*Ssim(x, y), 0.004867004622970161, 1e-9);
  EXPECT_NEAR(*Ssim(x, z), 0.9571407298208462, 1e-9);
}

TEST(IdentitySimilarityTest, Examples) {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> neg = {-1, -2, -3};
  const std::vector<double> orth = {3, 0, -1};
  const std::vector<double> zero = {0, 0, 0};
  EXPECT_EQ(IdentitySimilarity(a, a), 1.0);
  EXPECT_EQ(IdentitySimilarity(a, neg), 0.0);
  EXPECT_EQ(IdentitySimilarity(a, orth), 0.5);
  EXPECT_EQ(IdentitySimilarity(a, zero), 0.5);
}

class ModelMetricsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    TrainConfig c;
    c.hidden_dims = {32};
    c.latent_dim = 8;
    c.identity_len = 4;
    model_ = *InitializeModel(16, c);
  }
  AutoencoderModel model_ = *AutoencoderModel::Create({4, 1, 4}, 0);
};

TEST_F(ModelMetricsTest, IssOfIdenticalImagesIsOne) {
  const Image x = RandomImage(16, 9);
  EXPECT_EQ(*Iss(model_, x, x), 1.0);
}

TEST_F(ModelMetricsTest, FppsrEdgeCases) {
  std::vector<Image> xs;
  for (int i = 0; i < 5; ++i) xs.push_back(RandomImage(16, 40 + i));
  EXPECT_EQ(*Fppsr(model_, xs, xs, 1.0), 0.0);
  std::vector<Image> ys;
  for (int i = 0; i < 5; ++i) ys.push_back(RandomImage(16, 50 + i));
  EXPECT_EQ(*Fppsr(model_, xs, ys, 0.0), 0.0);
  auto scores = *IssBatch(model_, xs, ys);
  const double above = *std::max_element(scores.begin(), scores.end()) + 1e-9;
  EXPECT_EQ(*Fppsr(model_, xs, ys, std::min(1.0, above)), 1.0);
  EXPECT_FALSE(Fppsr(model_, {}, {}, 0.5).ok());
  EXPECT_FALSE(Fppsr(model_, xs, ys, 1.5).ok());
}

TEST(FppsrTest, OppositeEmbeddingsAllSucceed) {
  const std::vector<double> iss = {0.0, 0.0, 0.0};
  EXPECT_EQ(*FppsrFromScores(iss, 0.5), 1.0);
}

TEST(CalibrationTest, ConstantImpostors) {
  auto c = CalibrateThresholdFromScores({0.9, 0.8}, std::vector<double>(10, 0.2));
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->tau, 0.2);
  EXPECT_EQ(c->impostor_histogram.total(), 10);
}

TEST(CalibrationTest, NearestRankOnGrid) {
  std::vector<double> grid;
  for (int i = 0; i < 100; ++i) grid.push_back(i / 100.0);
  auto c = CalibrateThresholdFromScores({1.0}, grid, 95);
  ASSERT_TRUE(c.ok());
  EXPECT_DOUBLE_EQ(c->tau, 0.94);
  EXPECT_FALSE(CalibrateThresholdFromScores({}, grid).ok());
  EXPECT_FALSE(CalibrateThresholdFromScores({1.0}, {}).ok());
}

TEST(CalibrationTest, HistogramCsv) {
  auto c = *CalibrateThresholdFromScores({0.9, 0.8}, {0.1, 0.2, 0.3});
  const std::string path =
      (std::filesystem::temp_directory_path() / "latentdp_cal.csv").string();
  ASSERT_TRUE(WriteCalibrationCsv(c, path).ok());
  auto t = CsvTable::Read(path);
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t->rows().size(), 40u);
  std::remove(path.c_str());
}

// Independent oracle: matrix square roots by the Denman-Beavers iteration
// with Gauss-Jordan inverses, no eigensolver involved.
using Dense = std::vector<std::vector<double>>;

Dense Mul(const Dense& a, const Dense& b) {
  const size_t n = a.size();
  Dense c(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense Inverse(Dense a) {
  const size_t n = a.size();
  Dense inv(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const double d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Dense SqrtDenmanBeavers(const Dense& a) {
  const size_t n = a.size();
  Dense y = a;
  Dense z(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) z[i][i] = 1.0;
  for (int it = 0; it < 60; ++it) {
    const Dense yi = Inverse(y), zi = Inverse(z);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const double ny = 0.5 * (y[i][j] + zi[i][j]);
        const double nz = 0.5 * (z[i][j] + yi[i][j]);
        y[i][j] = ny;
        z[i][j] = nz;
      }
  }
  return y;
}

double OracleFed(const std::vector<std::vector<double>>& a,
                 const std::vector<std::vector<double>>& b) {
  const size_t d = a[0].size();
  auto fit = [d](const std::vector<std::vector<double>>& v,
                 std::vector<double>& mu, Dense& cov) {
    mu.assign(d, 0.0);
    for (const auto& x : v)
      for (size_t i = 0; i < d; ++i) mu[i] += x[i] / v.size();
    cov.assign(d, std::vector<double>(d, 0.0));
    for (const auto& x : v)
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
          cov[i][j] += (x[i] - mu[i]) * (x[j] - mu[j]) / (v.size() - 1.0);
  };
  std::vector<double> ma, mb;
  Dense sa, sb;
  fit(a, ma, sa);
  fit(b, mb, sb);
  const Dense ra = SqrtDenmanBeavers(sa);
  const Dense inner = SqrtDenmanBeavers(Mul(Mul(ra, sb), ra));
  double out = 0.0;
  for (size_t i = 0; i < d; ++i) {
    out += (ma[i] - mb[i]) * (ma[i] - mb[i]) + sa[i][i] + sb[i][i] -
           2.0 * inner[i][i];
  }
  return out;
}

std::vector<std::vector<double>> GaussianCloud(int n, int d, double shift,
                                               double stretch, uint64_t seed) {
  RngStream s(seed);
  std::vector<std::vector<double>> out;
  for (int i = 0; i < n; ++i) {
    std::vector<double> v(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
      v[k] = shift + (1.0 + stretch * k) * *GaussianSample(s, 0.0, 1.0);
    }
    // Correlate the first two coordinates.
    v[1] += 0.5 * v[0];
    out.push_back(std::move(v));
  }
  return out;
}

TEST(FedTest, SelfDistanceIsZero) {
  const auto a = GaussianCloud(50, 4, 0.0, 0.3, 1);
  const double f = *Fed(a, a);
  EXPECT_LE(std::abs(f), 1e-8);
}

TEST(FedTest, OneDimensionalMeanShift) {
  const std::vector<std::vector<double>> a = {{0}, {1}, {2}, {3}};
  const std::vector<std::vector<double>> b = {{5}, {6}, {7}, {8}};
  EXPECT_NEAR(*Fed(a, b), 25.0, 1e-12);
}

TEST(FedTest, MatchesDenmanBeaversOracle) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = GaussianCloud(40, 4, 0.0, 0.2, 10 + seed);
    const auto b = GaussianCloud(60, 4, 0.3, 0.5, 20 + seed);
    const double f = *Fed(a, b);
    EXPECT_NEAR(f, OracleFed(a, b), 1e-6);
    EXPECT_NEAR(f, *Fed(b, a), 1e-8);
    EXPECT_GE(f, -1e-8);
  }
}

TEST(FedTest, RankDeficientCovarianceStaysNonNegative) {
  // Three points in 4-D give a rank-2 covariance.
  const std::vector<std::vector<double>> a = {{1, 0, 0, 0}, {0, 1, 0, 0},
                                              {0, 0, 1, 0}};
  EXPECT_GE(*Fed(a, a), -1e-8);
  EXPECT_LE(*Fed(a, a), 1e-8);
}

TEST(FedTest, Errors) {
  const std::vector<std::vector<double>> one = {{1, 2}};
  const std::vector<std::vector<double>> two = {{1, 2}, {3, 4}};
  const std::vector<std::vector<double>> other = {{1, 2, 3}, {3, 4, 5}};
  EXPECT_FALSE(Fed(one, two).ok());
  EXPECT_FALSE(Fed(two, other).ok());
}

TEST(BlurTest, ConstantUnchangedAndRadiusZeroIsIdentity) {
  const Image c = Image::Filled(16, 16, 0.37);
  const Image b = *GaussianBlur(c, 2.0, 5);
  for (double p : b.pixels()) EXPECT_NEAR(p, 0.37, 1e-12);
  const Image x = RandomImage(16, 3);
  EXPECT_EQ(*GaussianBlur(x, 1.0, 0), x);
}

TEST(BlurTest, InteriorImpulseMatchesDirectConvolution) {
  std::vector<double> p(21 * 21, 0.0);
  p[10 * 21 + 10] = 1.0;
  const Image x = *Image::Create(21, 21, p);
  const double sigma = 1.3;
  const int radius = 3;
  const Image b = *GaussianBlur(x, sigma, radius);
  double norm = 0.0;
  for (int k = -radius; k <= radius; ++k) norm += std::exp(-k * k / (2 * sigma * sigma));
  double total = 0.0;
  for (int r = 0; r < 21; ++r) {
    for (int c = 0; c < 21; ++c) {
      const int dr = r - 10, dc = c - 10;
      double expected = 0.0;
      if (std::abs(dr) <= radius && std::abs(dc) <= radius) {
        expected = std::exp(-(dr * dr + dc * dc) / (2 * sigma * sigma)) /
                   (norm * norm);
      }
      EXPECT_NEAR(b.at(c, r), expected, 1e-15);
      total += b.at(c, r);
    }
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(BlurTest, RangeAndErrors) {
  const Image x = RandomImage(16, 4);
  const Image blurred = *GaussianBlur(x, 3.0, 9);
  for (double p : blurred.pixels()) {
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
  EXPECT_FALSE(GaussianBlur(x, 0.0, 2).ok());
  EXPECT_FALSE(GaussianBlur(x, 1.0, -1).ok());
  EXPECT_EQ(BlurRadiusFor(1.5), 5);
}

TEST(MosaicTest, Examples) {
  const Image x = RandomImage(16, 6);
  EXPECT_EQ(*Mosaic(x, 1), x);
  double mean = 0.0;
  for (double p : x.pixels()) mean += p;
  mean /= x.size();
  const Image whole = *Mosaic(x, 16);
  for (double p : whole.pixels()) EXPECT_NEAR(p, mean, 1e-12);
  const Image tiny = *Image::Create(2, 2, {0, 1, 0, 1});
  const Image flat = *Mosaic(tiny, 2);
  for (double p : flat.pixels()) EXPECT_EQ(p, 0.5);
  EXPECT_FALSE(Mosaic(x, 0).ok());
}

TEST(MosaicTest, PartialTilesUseTheirOwnMean) {
  // 3x1 image with block 2: tiles {0, 1} and {2}.
  const Image x = *Image::Create(3, 1, {0.2, 0.4, 0.9});
  const Image m = *Mosaic(x, 2);
  EXPECT_NEAR(m.at(0, 0), 0.3, 1e-15);
  EXPECT_NEAR(m.at(1, 0), 0.3, 1e-15);
  EXPECT_EQ(m.at(2, 0), 0.9);
}

TEST_F(ModelMetricsTest, ReportInvariantsAndCsv) {
  std::vector<Image> xs, ys;
  for (int i = 0; i < 6; ++i) {
    xs.push_back(RandomImage(16, 60 + i));
    ys.push_back(*Mosaic(xs.back(), 4));
  }
  const std::vector<int> ids = {5, 3, 1, 4, 0, 2};
  auto r = EvaluatePairs(model_, ids, xs, ys, 0.9);
  ASSERT_TRUE(r.ok()) << r.status();
  ASSERT_EQ(r->rows.size(), 6u);
  for (size_t i = 0; i < r->rows.size(); ++i) {
    const MetricsRow& row = r->rows[i];
    EXPECT_EQ(row.image_id, static_cast<int>(i));
    EXPECT_GE(row.l2, 0.0);
    EXPECT_GE(row.ssim, 0.0);
    EXPECT_LE(row.ssim, 1.0);
    EXPECT_GE(row.iss, 0.0);
    EXPECT_LE(row.iss, 1.0);
  }
  EXPECT_GE(r->fed, -1e-8);
  EXPECT_GE(r->fppsr, 0.0);
  EXPECT_LE(r->fppsr, 1.0);
  EXPECT_EQ(r->threshold, 0.9);

  const auto dir = std::filesystem::temp_directory_path();
  const std::string rows = (dir / "latentdp_rows.csv").string();
  const std::string agg = (dir / "latentdp_agg.csv").string();
  ASSERT_TRUE(WriteRowsCsv(*r, rows).ok());
  ASSERT_TRUE(WriteAggregateCsv(*r, agg).ok());
  auto t = CsvTable::Read(rows);
  EXPECT_THAT(t->header(),
              ::testing::ElementsAre("image_id", "l2", "ald_inf", "ssim", "iss"));
  auto a = CsvTable::Read(agg);
  EXPECT_THAT(a->header(), ::testing::ElementsAre("metric", "value"));
  std::vector<std::string> names;
  for (const auto& row : a->rows()) names.push_back(row[0]);
  EXPECT_THAT(names, ::testing::ElementsAre("mean_l2", "mean_ald_inf",
                                            "mean_ssim", "mean_iss", "fed",
                                            "fppsr", "threshold"));
  std::remove(rows.c_str());
  std::remove(agg.c_str());

  const std::vector<Image> x2 = {xs[0], xs[1]};
  const std::vector<Image> y2 = {ys[0], ys[1]};
  EXPECT_FALSE(EvaluatePairs(model_, std::vector<int>{0, 0}, x2, y2, 0.5).ok());
}

}  // namespace
}  // namespace latentdp
