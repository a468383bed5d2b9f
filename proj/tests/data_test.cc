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
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "latentdp/base/binary_io.h"
#include "latentdp/data/faces.h"
#include "latentdp/data/manifest.h"
#include "latentdp/data/pgm.h"
#include "latentdp/numerics/rng.h"

namespace latentdp {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Image RandomImage(int side, uint64_t seed) {
  RngStream s(seed);
  std::vector<double> p(static_cast<size_t>(side * side));
  for (double& v : p) v = s.UniformOpen() + 0.5;
  return *Image::Create(side, side, std::move(p));
}

TEST(PgmTest, HeaderBytesAreExact) {
  const std::string bytes = EncodePgm(RandomImage(32, 1));
  EXPECT_EQ(bytes.substr(0, 13), "P5\n32 32\n255\n");
  EXPECT_EQ(bytes.size(), 13u + 1024u);
}

TEST(PgmTest, RoundTripErrorBounded) {
  const Image x = RandomImage(32, 2);
  const fs::path dir = TempDir("latentdp_pgm");
  const std::string path = (dir / "x.pgm").string();
  ASSERT_TRUE(WritePgm(x, path).ok());
  auto y = ReadPgm(path);
  ASSERT_TRUE(y.ok()) << y.status();
  ASSERT_EQ(y->size(), x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    EXPECT_LE(std::abs(x.pixels()[i] - y->pixels()[i]), 1.0 / 510 + 1e-15);
  }
  // Quantized images survive a second round trip unchanged.
  EXPECT_EQ(*DecodePgm(EncodePgm(*y)), *y);
  fs::remove_all(dir);
}

TEST(PgmTest, AcceptsCommentsAndWhitespace) {
  std::string bytes = "P5\n# made by hand\n2  1\n# another\n255\n";
  bytes.push_back(static_cast<char>(0));
  bytes.push_back(static_cast<char>(255));
  auto img = DecodePgm(bytes);
  ASSERT_TRUE(img.ok()) << img.status();
  EXPECT_EQ(img->width(), 2);
  EXPECT_EQ(img->at(0, 0), 0.0);
  EXPECT_EQ(img->at(1, 0), 1.0);
}

TEST(PgmTest, DistinctErrors) {
  auto ascii = DecodePgm("P2\n2 2\n255\n0 0 0 0\n");
  EXPECT_EQ(ascii.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(ascii.status().message().find("bad magic"), absl::string_view::npos);

  auto maxval = DecodePgm(std::string("P5\n1 1\n65535\n\0\0", 16));
  EXPECT_EQ(maxval.status().code(), absl::StatusCode::kUnimplemented);
  EXPECT_NE(maxval.status().message().find("bad maxval"), absl::string_view::npos);

  auto truncated = DecodePgm("P5\n4 4\n255\nabc");
  EXPECT_EQ(truncated.status().code(), absl::StatusCode::kDataLoss);
  EXPECT_NE(truncated.status().message().find("truncated"),
            absl::string_view::npos);

  EXPECT_EQ(ReadPgm("/nonexistent/latentdp.pgm").status().code(),
            absl::StatusCode::kNotFound);
}

FaceParams SymmetricParams() {
  FaceParams p;
  p.identity = FaceIdentity{};
  p.nuisance = FaceNuisance{};
  return p;
}

TEST(RenderTest, DeterministicAndInRange) {
  FaceParams p = SymmetricParams();
  p.nuisance.noise_std = 0.02;
  p.nuisance.dx = 1.3;
  RngStream a(4), b(4);
  const Image x = *RenderFace(p, 32, a);
  EXPECT_EQ(x, *RenderFace(p, 32, b));
  for (double v : x.pixels()) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(RenderTest, NoiselessSymmetricFaceIsMirrorSymmetric) {
  RngStream s(5);
  const Image x = *RenderFace(SymmetricParams(), 32, s);
  for (int r = 0; r < 32; ++r) {
    for (int c = 0; c < 32; ++c) {
      EXPECT_NEAR(x.at(c, r), x.at(31 - c, r), 1e-12);
    }
  }
}

TEST(RenderTest, FeaturesAreDrawn) {
  RngStream s(6);
  const Image x = *RenderFace(SymmetricParams(), 32, s);
  std::set<double> values(x.pixels().begin(), x.pixels().end());
  EXPECT_TRUE(values.count(0.15));  // background
  EXPECT_TRUE(values.count(0.75));  // skin
  EXPECT_TRUE(values.count(0.1));   // eye interior
}

TEST(RenderTest, RejectsOutOfRangeParamsAndSmallSide) {
  RngStream s(7);
  FaceParams p = SymmetricParams();
  EXPECT_FALSE(RenderFace(p, 15, s).ok());
  p.identity.face_width = 0.5;
  EXPECT_FALSE(RenderFace(p, 32, s).ok());
  p = SymmetricParams();
  p.nuisance.dx = 2.5;
  EXPECT_FALSE(RenderFace(p, 32, s).ok());
  p = SymmetricParams();
  p.nuisance.noise_std = 0.03;
  EXPECT_FALSE(RenderFace(p, 32, s).ok());
  p = SymmetricParams();
  p.nuisance.brightness = -0.06;
  EXPECT_FALSE(RenderFace(p, 32, s).ok());
}

TEST(CorpusTest, DefaultShape) {
  auto c = GenerateCorpus(CorpusOptions{});
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->samples.size(), 500u);
  EXPECT_EQ(c->identities.size(), 50u);
  std::set<int> ids;
  int eval = 0;
  for (const FaceSample& s : c->samples) {
    ids.insert(s.identity_id);
    if (s.split == Split::kEval) ++eval;
    EXPECT_EQ(s.image.width(), 32);
  }
  EXPECT_EQ(ids.size(), 50u);
  EXPECT_EQ(*ids.begin(), 0);
  EXPECT_EQ(*ids.rbegin(), 49);
  EXPECT_EQ(eval, 100);
}

TEST(CorpusTest, SameSeedIsBitIdentical) {
  CorpusOptions o;
  o.n_identities = 5;
  o.samples_per_identity = 3;
  auto a = GenerateCorpus(o);
  auto b = GenerateCorpus(o);
  ASSERT_TRUE(a.ok() && b.ok());
  for (size_t i = 0; i < a->samples.size(); ++i) {
    EXPECT_EQ(a->samples[i].image, b->samples[i].image);
    EXPECT_EQ(EncodePgm(a->samples[i].image), EncodePgm(b->samples[i].image));
  }
  o.seed = 2;
  EXPECT_NE(GenerateCorpus(o)->samples[0].image, a->samples[0].image);
}

TEST(CorpusTest, SamplesShareIdentityAndDifferInNuisance) {
  CorpusOptions o;
  o.n_identities = 4;
  o.samples_per_identity = 3;
  auto c = GenerateCorpus(o);
  ASSERT_TRUE(c.ok());
  const FaceSample& a = c->samples[0];
  const FaceSample& b = c->samples[1];
  EXPECT_EQ(a.identity_id, b.identity_id);
  EXPECT_EQ(a.params.identity, b.params.identity);
  EXPECT_FALSE(a.params.nuisance == b.params.nuisance);
  EXPECT_NE(a.image, b.image);
}

TEST(CorpusTest, IdentitiesAreSeparated) {
  CorpusOptions o;
  auto c = GenerateCorpus(o);
  ASSERT_TRUE(c.ok());
  double nearest = 1e9;
  for (size_t i = 0; i < c->identities.size(); ++i) {
    for (size_t j = i + 1; j < c->identities.size(); ++j) {
      nearest = std::min(nearest, IdentityDistance(c->identities[i],
                                                   c->identities[j]));
    }
  }
  EXPECT_GT(nearest, o.min_identity_separation);
}

TEST(CorpusTest, OptionValidation) {
  CorpusOptions o;
  o.n_identities = 1;
  EXPECT_FALSE(GenerateCorpus(o).ok());
  o = CorpusOptions{};
  o.jitter_px = 3;
  EXPECT_FALSE(GenerateCorpus(o).ok());
  o = CorpusOptions{};
  o.eval_per_identity = 11;
  EXPECT_FALSE(GenerateCorpus(o).ok());
}

TEST(ManifestTest, WriteCorpusAndReadBack) {
  CorpusOptions o;
  o.n_identities = 3;
  o.samples_per_identity = 4;
  o.eval_per_identity = 1;
  auto c = GenerateCorpus(o);
  const fs::path dir = TempDir("latentdp_manifest");
  auto m = WriteCorpus(*c, dir.string());
  ASSERT_TRUE(m.ok()) << m.status();
  auto text = ReadFileBytes((dir / "manifest.csv").string());
  ASSERT_TRUE(text.ok());
  EXPECT_EQ(text->substr(0, 25), "path,identity_id,split\nfa");

  auto back = DatasetManifest::Read((dir / "manifest.csv").string());
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->entries(), m->entries());
  EXPECT_EQ(back->num_identities(), 3);

  auto eval = LoadImages(*back, dir.string(), Split::kEval);
  ASSERT_TRUE(eval.ok());
  EXPECT_EQ(eval->images.size(), 3u);
  auto all = LoadImages(*back, dir.string(), std::nullopt);
  EXPECT_EQ(all->images.size(), 12u);
  EXPECT_EQ(all->labels[5], 1);

  fs::remove(dir / m->entries()[0].path);
  EXPECT_EQ(DatasetManifest::Read((dir / "manifest.csv").string()).status().code(),
            absl::StatusCode::kNotFound);
  fs::remove_all(dir);
}

TEST(ManifestTest, IdsMustBeDense) {
  EXPECT_FALSE(DatasetManifest::Parse("path,identity_id,split\na.pgm,0,train\n"
                                      "b.pgm,2,eval\n")
                   .ok());
  EXPECT_FALSE(
      DatasetManifest::Parse("path,identity_id,split\na.pgm,0,test\n").ok());
  EXPECT_FALSE(DatasetManifest::Parse("file,id,split\na.pgm,0,train\n").ok());
  EXPECT_TRUE(DatasetManifest::Parse("path,identity_id,split\na.pgm,0,train\n"
                                     "b.pgm,1,eval\n")
                  .ok());
}

}  // namespace
}  // namespace latentdp
