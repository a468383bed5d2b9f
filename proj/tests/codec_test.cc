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
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "latentdp/base/binary_io.h"
#include "latentdp/codec/autoencoder.h"
#include "latentdp/codec/image.h"
#include "latentdp/codec/latent_calibration.h"
#include "latentdp/codec/model_io.h"
#include "latentdp/numerics/rng.h"

namespace latentdp {
namespace {

// 8x8 images through 64 -> 16 -> 8 -> 16 -> 64.
TrainConfig SmallConfig() {
  TrainConfig c;
  c.hidden_dims = {16};
  c.latent_dim = 8;
  c.identity_len = 4;
  c.epochs = 5;
  c.batch_size = 2;
  c.learning_rate = 0.5;
  return c;
}

Image RandomImage(int side, uint64_t seed) {
  RngStream s(seed);
  std::vector<double> p(static_cast<size_t>(side * side));
  for (double& v : p) v = s.UniformOpen() + 0.5;
  return *Image::Create(side, side, std::move(p));
}

std::vector<Image> RandomImages(int side, int n, uint64_t seed) {
  std::vector<Image> out;
  for (int i = 0; i < n; ++i) out.push_back(RandomImage(side, seed * 1000 + i));
  return out;
}

TEST(ImageTest, RejectsOutOfRangePixels) {
  EXPECT_FALSE(Image::Create(1, 1, {1.5}).ok());
  EXPECT_FALSE(Image::Create(1, 1, {NAN}).ok());
  EXPECT_FALSE(Image::Create(2, 1, {0.5}).ok());
  EXPECT_TRUE(Image::Create(1, 2, {0.0, 1.0}).ok());
}

TEST(AutoencoderTest, RejectsMalformedDims) {
  EXPECT_FALSE(AutoencoderModel::Create({64, 8, 16}, 4).ok());
  EXPECT_FALSE(AutoencoderModel::Create({60, 8, 60}, 4).ok());
  EXPECT_FALSE(AutoencoderModel::Create({64, 8, 64}, 9).ok());
  EXPECT_TRUE(AutoencoderModel::Create({64, 8, 64}, 8).ok());
}

TEST(AutoencoderTest, ZeroModelEncodesToZeroAndDecodesToHalf) {
  auto model = AutoencoderModel::Create({64, 16, 8, 16, 64}, 4);
  ASSERT_TRUE(model.ok());
  auto z = Encode(*model, RandomImage(8, 3));
  ASSERT_TRUE(z.ok());
  for (double v : z->values) EXPECT_EQ(v, 0.0);
  auto y = Decode(*model, *z);
  ASSERT_TRUE(y.ok());
  for (double p : y->pixels()) EXPECT_EQ(p, 0.5);
}

TEST(AutoencoderTest, EncodeDecodeAreDeterministic) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  const Image x = RandomImage(8, 4);
  auto a = Encode(*model, x);
  auto b = Encode(*model, x);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(a->size(), 8u);
  EXPECT_EQ(a->identity_len, 4);
  EXPECT_EQ(*Decode(*model, *a), *Decode(*model, *b));
}

TEST(AutoencoderTest, DimensionMismatchRejected) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  EXPECT_FALSE(Encode(*model, RandomImage(9, 1)).ok());
  LatentVector z{std::vector<double>(7, 0.0), 4};
  EXPECT_FALSE(Decode(*model, z).ok());
}

TEST(AutoencoderTest, DecodeStaysStrictlyInsideUnitInterval) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  LatentVector z{std::vector<double>(8, 1e6), 4};
  for (int i = 0; i < 8; i += 2) z.values[i] = -1e6;
  auto y = Decode(*model, z);
  ASSERT_TRUE(y.ok());
  for (double p : y->pixels()) {
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 1.0);
  }
}

TEST(AutoencoderTest, BatchMatchesSingleExactly) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  const std::vector<Image> xs = RandomImages(8, 3, 5);
  auto zs = EncodeBatch(*model, xs);
  ASSERT_TRUE(zs.ok());
  auto ys = DecodeBatch(*model, *zs);
  ASSERT_TRUE(ys.ok());
  for (size_t i = 0; i < xs.size(); ++i) {
    const LatentVector z = *Encode(*model, xs[i]);
    EXPECT_EQ(z, (*zs)[i]);
    EXPECT_EQ(*Decode(*model, z), (*ys)[i]);
  }
}

TEST(LossTest, DuplicatedBatchHasSameLoss) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  const Image x = RandomImage(8, 6);
  const std::vector<Image> one = {x};
  const std::vector<Image> two = {x, x};
  EXPECT_NEAR(*ComputeLoss(*model, one), *ComputeLoss(*model, two), 1e-15);
}

TEST(LossTest, PerfectReconstructionHasZeroLossAndGradient) {
  // The zero model reconstructs the constant 0.5 image exactly.
  auto model = AutoencoderModel::Create({64, 16, 8, 16, 64}, 4);
  ASSERT_TRUE(model.ok());
  const std::vector<Image> batch = {Image::Filled(8, 8, 0.5)};
  auto lg = ComputeLossAndGradients(*model, batch);
  ASSERT_TRUE(lg.ok());
  EXPECT_EQ(lg->loss, 0.0);
  for (const DenseLayer& g : lg->gradients) {
    for (double v : g.weights) EXPECT_EQ(v, 0.0);
    for (double v : g.bias) EXPECT_EQ(v, 0.0);
  }
}

TEST(LossTest, EmptyBatchRejected) {
  auto model = InitializeModel(8, SmallConfig());
  EXPECT_FALSE(ComputeLoss(*model, {}).ok());
}

double RelativeError(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale < 1e-7) return std::abs(a - b) < 1e-10 ? 0.0 : 1.0;
  return std::abs(a - b) / scale;
}

// Central differences with h = 1e-5 are the independent oracle for every
// parameter of a small random model.
TEST(GradientCheckTest, EveryParameterMatchesCentralDifference) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  const std::vector<Image> batch = RandomImages(8, 3, 11);
  auto analytic = ComputeLossAndGradients(*model, batch);
  ASSERT_TRUE(analytic.ok());
  constexpr double kH = 1e-5;
  int checked = 0;
  double worst = 0.0;
  for (size_t l = 0; l < model->layers().size(); ++l) {
    auto probe = [&](std::vector<double>& (*field)(DenseLayer&), size_t i,
                     double expected) {
      AutoencoderModel plus = *model;
      AutoencoderModel minus = *model;
      field(plus.mutable_layers()[l])[i] += kH;
      field(minus.mutable_layers()[l])[i] -= kH;
      const double numeric =
          (*ComputeLoss(plus, batch) - *ComputeLoss(minus, batch)) / (2 * kH);
      worst = std::max(worst, RelativeError(expected, numeric));
      ++checked;
    };
    const DenseLayer& g = analytic->gradients[l];
    for (size_t i = 0; i < g.weights.size(); ++i) {
      probe([](DenseLayer& d) -> std::vector<double>& { return d.weights; }, i,
            g.weights[i]);
    }
    for (size_t i = 0; i < g.bias.size(); ++i) {
      probe([](DenseLayer& d) -> std::vector<double>& { return d.bias; }, i,
            g.bias[i]);
    }
  }
  EXPECT_EQ(static_cast<size_t>(checked), model->parameter_count());
  EXPECT_LT(worst, 1e-4);
}

TEST(TrainTest, OverfitsSingleImage) {
  TrainConfig c = SmallConfig();
  c.epochs = 400;
  c.batch_size = 1;
  const std::vector<Image> corpus = {RandomImage(8, 21)};
  auto r = Train(corpus, c);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->loss_trace.size(), 400u);
  EXPECT_LT(*ComputeLoss(r->model, corpus), 1e-3);
}

TEST(TrainTest, DeterministicInCorpusAndConfig) {
  const std::vector<Image> corpus = RandomImages(8, 6, 22);
  auto a = Train(corpus, SmallConfig());
  auto b = Train(corpus, SmallConfig());
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->model, b->model);
  EXPECT_EQ(a->loss_trace, b->loss_trace);
  TrainConfig other = SmallConfig();
  other.seed = 2;
  EXPECT_FALSE(Train(corpus, other)->model == a->model);
}

TEST(TrainTest, DivergenceReportsNonFiniteLoss) {
  TrainConfig c = SmallConfig();
  c.learning_rate = 1e300;
  c.epochs = 3;
  auto r = Train(RandomImages(8, 4, 23), c);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.status().code(), absl::StatusCode::kInternal);
}

TEST(TrainTest, ConfigValidation) {
  TrainConfig c = SmallConfig();
  c.momentum = 1.0;
  EXPECT_FALSE(c.Validate().ok());
  c = SmallConfig();
  c.epochs = 0;
  EXPECT_FALSE(c.Validate().ok());
  c = SmallConfig();
  c.learning_rate = 0.0;
  EXPECT_FALSE(c.Validate().ok());
  c = SmallConfig();
  c.identity_len = 9;
  EXPECT_FALSE(c.Validate().ok());
}

TEST(CalibrationTest, StandardizationPreservesReconstruction) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  const std::vector<Image> xs = RandomImages(8, 10, 31);
  AutoencoderModel calibrated = *model;
  ASSERT_TRUE(StandardizeLatentSpace(calibrated, xs).ok());
  auto zs = *EncodeBatch(calibrated, xs);
  for (int k = 0; k < 8; ++k) {
    double mean = 0.0, sq = 0.0;
    for (const auto& z : zs) mean += z.values[k];
    mean /= zs.size();
    for (const auto& z : zs) sq += (z.values[k] - mean) * (z.values[k] - mean);
    EXPECT_NEAR(mean, 0.0, 1e-9);
    EXPECT_NEAR(sq / (zs.size() - 1), 1.0, 1e-9);
  }
  for (const Image& x : xs) {
    const Image a = *Decode(*model, *Encode(*model, x));
    const Image b = *Decode(calibrated, *Encode(calibrated, x));
    for (size_t p = 0; p < a.size(); ++p) {
      EXPECT_NEAR(a.pixels()[p], b.pixels()[p], 1e-9);
    }
  }
}

TEST(CalibrationTest, PermutationReordersCodeAndPreservesOutput) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  const Image x = RandomImage(8, 32);
  const std::vector<int> order = {7, 6, 5, 4, 3, 2, 1, 0};
  AutoencoderModel permuted = *model;
  ASSERT_TRUE(PermuteLatents(permuted, order).ok());
  const LatentVector z = *Encode(*model, x);
  const LatentVector zp = *Encode(permuted, x);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(zp.values[k], z.values[order[k]]);
  // Same products, summed in a different order.
  const Image a = *Decode(*model, z);
  const Image b = *Decode(permuted, zp);
  for (size_t p = 0; p < a.size(); ++p) {
    EXPECT_NEAR(a.pixels()[p], b.pixels()[p], 1e-12);
  }
  EXPECT_FALSE(PermuteLatents(permuted, std::vector<int>{0, 0, 1, 2, 3, 4, 5, 6}).ok());
}

TEST(CalibrationTest, IdentityOrderPutsBestScoresFirst) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  const std::vector<Image> xs = RandomImages(8, 12, 33);
  std::vector<int> labels;
  for (int i = 0; i < 12; ++i) labels.push_back(i / 3);
  AutoencoderModel ordered = *model;
  auto order = OrderLatentsByIdentity(ordered, xs, labels);
  ASSERT_TRUE(order.ok());
  auto scores = IdentityScores(ordered, xs, labels);
  ASSERT_TRUE(scores.ok());
  for (size_t k = 1; k < scores->size(); ++k) {
    EXPECT_GE((*scores)[k - 1], (*scores)[k] - 1e-9);
  }
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(ModelIoTest, RoundTripIsBitExact) {
  auto model = InitializeModel(8, SmallConfig());
  ASSERT_TRUE(model.ok());
  const std::string path = TempPath("latentdp_model_rt.bin");
  ASSERT_TRUE(SaveModel(*model, path).ok());
  auto loaded = LoadModel(path);
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(*loaded, *model);
  std::remove(path.c_str());
}

TEST(ModelIoTest, HeaderLayout) {
  auto model = AutoencoderModel::Create({64, 8, 64}, 3);
  const std::string bytes = SerializeModel(*model);
  EXPECT_EQ(bytes.substr(0, 4), "DPIM");
  ByteReader r(bytes);
  ASSERT_TRUE(r.GetBytes(4).ok());
  EXPECT_EQ(*r.GetU32(), 1u);
  EXPECT_EQ(*r.GetU32(), 3u);
  EXPECT_EQ(*r.GetU32(), 64u);
  EXPECT_EQ(*r.GetU32(), 8u);
  EXPECT_EQ(*r.GetU32(), 64u);
  EXPECT_EQ(*r.GetU32(), 3u);
  EXPECT_EQ(r.remaining(), (64u * 8 + 8 + 8 * 64 + 64) * 8);
}

TEST(ModelIoTest, DistinctErrors) {
  auto model = InitializeModel(8, SmallConfig());
  const std::string bytes = SerializeModel(*model);

  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  auto a = ParseModel(bad_magic);
  EXPECT_EQ(a.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(a.status().message().find("bad magic"), absl::string_view::npos);

  std::string bad_version = bytes;
  bad_version[4] = 2;
  EXPECT_EQ(ParseModel(bad_version).status().code(),
            absl::StatusCode::kFailedPrecondition);

  auto c = ParseModel(bytes.substr(0, bytes.size() - 3));
  EXPECT_EQ(c.status().code(), absl::StatusCode::kDataLoss);
  EXPECT_NE(c.status().message().find("truncated"), absl::string_view::npos);

  EXPECT_EQ(LoadModel(TempPath("latentdp_no_such_model.bin")).status().code(),
            absl::StatusCode::kNotFound);
}

}  // namespace
}  // namespace latentdp
