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
#include "latentdp/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "latentdp/base/binary_io.h"
#include "latentdp/base/csv.h"
#include "latentdp/base/status_macros.h"
#include "latentdp/codec/autoencoder.h"
#include "latentdp/codec/latent_calibration.h"
#include "latentdp/codec/model_io.h"
#include "latentdp/data/faces.h"
#include "latentdp/data/manifest.h"
#include "latentdp/data/pgm.h"
#include "latentdp/metrics/baselines.h"
#include "latentdp/metrics/distortion.h"
#include "latentdp/metrics/identity.h"
#include "latentdp/metrics/report.h"
#include "latentdp/metrics/ssim.h"
#include "latentdp/privacy/latent_io.h"
#include "latentdp/privacy/ledger.h"
#include "latentdp/privacy/mechanism.h"
#include "latentdp/privacy/privacy_params.h"
#include "latentdp/privacy/sensitivity.h"

namespace latentdp {
namespace {

namespace fs = std::filesystem;

// Task tags for the per-image noise streams.
constexpr uint64_t kPerturbTag = 201;
constexpr uint64_t kSweepTag = 300;

constexpr int kHeatmapImages = 20;

std::string Out(const RunConfig& config, const std::string& name) {
  return (fs::path(config.OutputDir()) / name).string();
}

absl::Status EnsureDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", dir, ": ", ec.message()));
  }
  return absl::OkStatus();
}

absl::Status WriteProvenance(const RunConfig& config, absl::string_view verb) {
  const std::string text =
      absl::StrCat("# latentdp ", kToolkitVersion, ", command: ", verb,
                   "\n# replay: latentdp ", verb,
                   " --config <this file>\n", config.ToText());
  return WriteFileBytes(Out(config, absl::StrCat("provenance_", verb, ".cfg")),
                        text);
}

absl::Status WriteKeyValues(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& rows,
    const char* key_header = "metric") {
  CsvTable csv({key_header, "value"});
  for (const auto& [k, v] : rows) RETURN_IF_ERROR(csv.AddRow({k, v}));
  return csv.WriteTo(path);
}

struct Dataset {
  DatasetManifest manifest;
  std::string base_dir;
};

absl::StatusOr<Dataset> LoadDataset(const RunConfig& config) {
  const std::string path = config.ManifestPath();
  ASSIGN_OR_RETURN(DatasetManifest manifest, DatasetManifest::Read(path));
  return Dataset{std::move(manifest), fs::path(path).parent_path().string()};
}

absl::StatusOr<std::optional<Split>> ParseSplitSelector(absl::string_view v) {
  if (v == "all") return std::optional<Split>();
  ASSIGN_OR_RETURN(Split s, ParseSplit(v));
  return std::optional<Split>(s);
}

// Mean of a vector in index order.
double Mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return v.empty() ? 0.0 : sum / static_cast<double>(v.size());
}

// ---------------------------------------------------------------------------
// Sensitivity and privacy parameters.

struct SensitivitySource {
  double delta_f = 0.0;
  std::optional<double> clip_radius;
};

absl::StatusOr<double> PositiveClipRadius(const RunConfig& config) {
  if (!config.IsSet("clip_radius")) {
    return absl::InvalidArgumentError(
        "sensitivity_mode = clip needs clip_radius");
  }
  ASSIGN_OR_RETURN(double radius, config.GetDouble("clip_radius"));
  if (!(radius > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("clip_radius must be > 0, got ", radius));
  }
  return radius;
}

absl::StatusOr<SensitivitySource> ResolveSensitivity(const RunConfig& config) {
  ASSIGN_OR_RETURN(SensitivityMode mode, config.Sensitivity());
  if (mode == SensitivityMode::kClip) {
    ASSIGN_OR_RETURN(double radius, PositiveClipRadius(config));
    return SensitivitySource{2.0 * radius, radius};
  }
  RunConfig resolved = config;
  if (!resolved.IsSet("delta_f")) {
    const std::string path = Out(config, "sensitivity.cfg");
    if (!fs::exists(path)) {
      return absl::FailedPreconditionError(
          "missing sensitivity: run cmd_sensitivity or set clip_radius "
          "(sensitivity_mode = clip)");
    }
    RETURN_IF_ERROR(resolved.LoadFile(path));
  }
  ASSIGN_OR_RETURN(double delta_f, resolved.GetDouble("delta_f"));
  if (delta_f < 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta_f must be >= 0, got ", delta_f));
  }
  return SensitivitySource{delta_f, std::nullopt};
}

absl::StatusOr<std::vector<bool>> MaskFor(const RunConfig& config,
                                          const AutoencoderModel& model) {
  ASSIGN_OR_RETURN(MaskMode mode, config.Mask());
  if (mode == MaskMode::kIdentityOnly) {
    if (model.identity_len() < 1) {
      return absl::FailedPreconditionError(
          "mask_mode = identity_only but the model has no identity block");
    }
    return IdentityMask(model.latent_dim(), model.identity_len());
  }
  return FullMask(model.latent_dim());
}

ReleaseOptions OptionsFor(const SensitivitySource& source) {
  ReleaseOptions o;
  o.clip_radius = source.clip_radius;
  return o;
}

// ---------------------------------------------------------------------------
// Threshold calibration shared by evaluate and sweep.

absl::Status WriteIssHeatmap(const AutoencoderModel& model,
                             std::span<const Image> images,
                             const std::string& path) {
  const size_t n = std::min<size_t>(images.size(), kHeatmapImages);
  ASSIGN_OR_RETURN(auto emb, IdentityEmbeddings(model, images.first(n)));
  CsvTable csv({"i", "j", "iss"});
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      RETURN_IF_ERROR(csv.AddRow({absl::StrCat(i), absl::StrCat(j),
                                  FormatDouble(IdentitySimilarity(emb[i], emb[j]))}));
    }
  }
  return csv.WriteTo(path);
}

absl::StatusOr<double> ResolveThreshold(const RunConfig& config,
                                        const AutoencoderModel& model) {
  if (config.IsSet("threshold")) {
    ASSIGN_OR_RETURN(double tau, config.GetDouble("threshold"));
    if (!(tau >= 0.0 && tau <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("threshold must be in [0, 1], got ", tau));
    }
    return tau;
  }
  ASSIGN_OR_RETURN(Dataset data, LoadDataset(config));
  ASSIGN_OR_RETURN(LabeledImages all,
                   LoadImages(data.manifest, data.base_dir, std::nullopt));
  ASSIGN_OR_RETURN(double percentile, config.GetDouble("fppsr_percentile"));
  ASSIGN_OR_RETURN(ThresholdCalibration cal,
                   CalibrateThresholdFromCorpus(model, all.images, all.labels,
                                                percentile));
  RETURN_IF_ERROR(WriteCalibrationCsv(cal, Out(config, "threshold_calibration.csv")));
  RETURN_IF_ERROR(WriteKeyValues(
      Out(config, "threshold_summary.csv"),
      {{"threshold", FormatDouble(cal.tau)},
       {"percentile", FormatDouble(cal.percentile)},
       {"genuine_pairs", absl::StrCat(cal.genuine.size())},
       {"impostor_pairs", absl::StrCat(cal.impostor.size())},
       {"genuine_mean_iss", FormatDouble(cal.genuine_mean)},
       {"impostor_mean_iss", FormatDouble(cal.impostor_mean)}}));
  ASSIGN_OR_RETURN(LabeledImages eval,
                   LoadImages(data.manifest, data.base_dir, Split::kEval));
  RETURN_IF_ERROR(WriteIssHeatmap(model, eval.images, Out(config, "iss_heatmap.csv")));
  return cal.tau;
}

// ---------------------------------------------------------------------------
// Evaluate helpers.

struct PairSet {
  std::vector<int> ids;
  std::vector<Image> originals;
  std::vector<Image> released;
};

absl::StatusOr<PairSet> ReadPairs(const std::string& path) {
  static const std::vector<std::string> header = {"image_id", "original",
                                                  "perturbed"};
  ASSIGN_OR_RETURN(CsvTable csv, CsvTable::Read(path, &header));
  const fs::path base = fs::path(path).parent_path();
  PairSet pairs;
  for (const auto& row : csv.rows()) {
    ASSIGN_OR_RETURN(int id, ParseInt(row[0]));
    ASSIGN_OR_RETURN(Image x, ReadPgm((base / row[1]).string()));
    ASSIGN_OR_RETURN(Image y, ReadPgm((base / row[2]).string()));
    if (x.width() != y.width() || x.height() != y.height()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "misaligned pair for image_id ", id, ": ", row[1], " is ", x.width(),
          "x", x.height(), ", ", row[2], " is ", y.width(), "x", y.height()));
    }
    pairs.ids.push_back(id);
    pairs.originals.push_back(std::move(x));
    pairs.released.push_back(std::move(y));
  }
  if (pairs.ids.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(path, " lists no pairs"));
  }
  return pairs;
}

absl::StatusOr<double> MeanIss(const AutoencoderModel& model,
                               std::span<const Image> originals,
                               std::span<const Image> released) {
  ASSIGN_OR_RETURN(std::vector<double> iss,
                   IssBatch(model, originals, released));
  return Mean(iss);
}

absl::StatusOr<std::vector<Image>> BlurAll(std::span<const Image> images,
                                           double sigma) {
  std::vector<Image> out;
  for (const Image& x : images) {
    ASSIGN_OR_RETURN(Image y, GaussianBlur(x, sigma, BlurRadiusFor(sigma)));
    out.push_back(std::move(y));
  }
  return out;
}

absl::StatusOr<std::vector<Image>> MosaicAll(std::span<const Image> images,
                                             int block) {
  std::vector<Image> out;
  for (const Image& x : images) {
    ASSIGN_OR_RETURN(Image y, Mosaic(x, block));
    out.push_back(std::move(y));
  }
  return out;
}

// Blur sigma whose mean ISS matches `target`, by bisection on the
// (empirically decreasing) ISS-versus-sigma curve.
absl::StatusOr<double> MatchBlurSigma(const AutoencoderModel& model,
                                      std::span<const Image> originals,
                                      double target) {
  double lo = 0.05, hi = 16.0;
  auto iss_at = [&](double sigma) -> absl::StatusOr<double> {
    ASSIGN_OR_RETURN(std::vector<Image> blurred, BlurAll(originals, sigma));
    return MeanIss(model, originals, blurred);
  };
  ASSIGN_OR_RETURN(double iss_lo, iss_at(lo));
  if (iss_lo <= target) return lo;
  ASSIGN_OR_RETURN(double iss_hi, iss_at(hi));
  if (iss_hi >= target) return hi;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    ASSIGN_OR_RETURN(double iss_mid, iss_at(mid));
    (iss_mid > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Mosaic block whose mean ISS is nearest `target`; ties go to the smaller
// block.
absl::StatusOr<int> MatchMosaicBlock(const AutoencoderModel& model,
                                     std::span<const Image> originals,
                                     double target) {
  int best = 1;
  double best_gap = std::numeric_limits<double>::infinity();
  const int side = std::max(originals.front().width(), originals.front().height());
  for (int block = 1; block <= side; ++block) {
    ASSIGN_OR_RETURN(std::vector<Image> tiles, MosaicAll(originals, block));
    ASSIGN_OR_RETURN(double iss, MeanIss(model, originals, tiles));
    const double gap = std::abs(iss - target);
    if (gap < best_gap) {
      best_gap = gap;
      best = block;
    }
  }
  return best;
}

struct TableRow {
  std::string method;
  std::string param;
  MetricsReport report;
};

absl::Status WriteMethodReport(const RunConfig& config, const TableRow& row) {
  RETURN_IF_ERROR(
      WriteRowsCsv(row.report, Out(config, absl::StrCat("metrics_", row.method, ".csv"))));
  return WriteAggregateCsv(
      row.report, Out(config, absl::StrCat("aggregate_", row.method, ".csv")));
}

std::string ReleaseParam(const RunConfig& config) {
  const std::string path = Out(config, "release_summary.csv");
  static const std::vector<std::string> header = {"key", "value"};
  auto csv = CsvTable::Read(path, &header);
  if (!csv.ok()) return "unknown";
  std::string scale = "?", epsilon = "?";
  for (const auto& r : csv->rows()) {
    if (r[0] == "scale") scale = r[1];
    if (r[0] == "epsilon") epsilon = r[1];
  }
  return absl::StrCat("scale=", scale, ";epsilon=", epsilon);
}

}  // namespace

// ---------------------------------------------------------------------------

absl::Status RunGenerate(const RunConfig& config) {
  ASSIGN_OR_RETURN(CorpusOptions options, config.Corpus());
  RETURN_IF_ERROR(EnsureDir(config.OutputDir()));
  ASSIGN_OR_RETURN(Corpus corpus, GenerateCorpus(options));
  ASSIGN_OR_RETURN(DatasetManifest manifest,
                   WriteCorpus(corpus, config.OutputDir()));
  (void)manifest;
  return WriteProvenance(config, "generate");
}

absl::Status RunTrain(const RunConfig& config) {
  ASSIGN_OR_RETURN(TrainConfig train_config, config.Train());
  ASSIGN_OR_RETURN(Dataset data, LoadDataset(config));
  ASSIGN_OR_RETURN(LabeledImages train,
                   LoadImages(data.manifest, data.base_dir, Split::kTrain));
  RETURN_IF_ERROR(EnsureDir(config.OutputDir()));
  ASSIGN_OR_RETURN(TrainResult result, Train(train.images, train_config));
  AutoencoderModel& model = result.model;
  // Both steps are function preserving: decode(encode(x)) is unchanged.
  RETURN_IF_ERROR(StandardizeLatentSpace(model, train.images));
  if (model.identity_len() > 0) {
    ASSIGN_OR_RETURN(std::vector<int> order,
                     OrderLatentsByIdentity(model, train.images, train.labels));
    (void)order;
  }
  RETURN_IF_ERROR(SaveModel(model, config.ModelPath()));

  CsvTable trace({"epoch", "loss"});
  for (size_t e = 0; e < result.loss_trace.size(); ++e) {
    RETURN_IF_ERROR(
        trace.AddRow({absl::StrCat(e + 1), FormatDouble(result.loss_trace[e])}));
  }
  RETURN_IF_ERROR(trace.WriteTo(Out(config, "loss_trace.csv")));

  ASSIGN_OR_RETURN(double train_mse, ReconstructionMse(model, train.images));
  std::vector<std::pair<std::string, std::string>> summary = {
      {"final_epoch_loss", FormatDouble(result.loss_trace.back())},
      {"train_mse", FormatDouble(train_mse)}};
  auto eval = LoadImages(data.manifest, data.base_dir, Split::kEval);
  if (eval.ok()) {
    ASSIGN_OR_RETURN(double eval_mse, ReconstructionMse(model, eval->images));
    summary.push_back({"eval_mse", FormatDouble(eval_mse)});
  }
  // Range of the latent coordinates over the training split.
  ASSIGN_OR_RETURN(std::vector<LatentVector> codes,
                   EncodeBatch(model, train.images));
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const LatentVector& z : codes) {
    for (double v : z.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  summary.push_back({"latent_min", FormatDouble(lo)});
  summary.push_back({"latent_max", FormatDouble(hi)});
  summary.push_back({"parameters", absl::StrCat(model.parameter_count())});
  RETURN_IF_ERROR(WriteKeyValues(Out(config, "train_summary.csv"), summary));
  return WriteProvenance(config, "train");
}

absl::Status RunSensitivity(const RunConfig& config) {
  ASSIGN_OR_RETURN(AutoencoderModel model, LoadModel(config.ModelPath()));
  ASSIGN_OR_RETURN(Dataset data, LoadDataset(config));
  ASSIGN_OR_RETURN(std::optional<Split> split,
                   ParseSplitSelector(config.Get("sensitivity_split")));
  ASSIGN_OR_RETURN(LabeledImages images,
                   LoadImages(data.manifest, data.base_dir, split));
  ASSIGN_OR_RETURN(SensitivityMode mode, config.Sensitivity());
  RETURN_IF_ERROR(EnsureDir(config.OutputDir()));

  ASSIGN_OR_RETURN(std::vector<LatentVector> latents,
                   EncodeBatch(model, images.images));
  std::optional<double> radius;
  if (mode == SensitivityMode::kClip) {
    ASSIGN_OR_RETURN(double r, PositiveClipRadius(config));
    radius = r;
    for (LatentVector& z : latents) {
      ASSIGN_OR_RETURN(z, ClipLatent(z, r));
    }
  }
  ASSIGN_OR_RETURN(SensitivityReport report, EstimateSensitivity(latents));
  const double delta_f = radius.has_value() ? 2.0 * *radius : report.delta_f;

  RETURN_IF_ERROR(WriteHistogramCsv(report, Out(config, "sensitivity_histogram.csv")));
  RETURN_IF_ERROR(WriteHeatmapCsv(report, Out(config, "sensitivity_heatmap.csv"),
                                  kHeatmapImages));
  RETURN_IF_ERROR(WriteLatents(latents, Out(config, "latents.dplz")));
  RETURN_IF_ERROR(WriteLatentsCsv(latents, Out(config, "latents.csv")));
  RETURN_IF_ERROR(WriteKeyValues(
      Out(config, "sensitivity_summary.csv"),
      {{"delta_f", FormatDouble(delta_f)},
       {"empirical_max_l1", FormatDouble(report.delta_f)},
       {"mean_l1", FormatDouble(report.stats.mean)},
       {"min_l1", FormatDouble(report.stats.min)},
       {"images", absl::StrCat(report.count)},
       {"argmax_i", absl::StrCat(report.argmax.first)},
       {"argmax_j", absl::StrCat(report.argmax.second)}}));
  RETURN_IF_ERROR(WriteFileBytes(
      Out(config, "sensitivity.cfg"),
      absl::StrCat("# written by latentdp sensitivity (",
                   radius.has_value() ? "clip" : "empirical", " mode)\n",
                   "delta_f = ", FormatDouble(delta_f), "\n")));
  return WriteProvenance(config, "sensitivity");
}

absl::Status RunPerturb(const RunConfig& config) {
  ASSIGN_OR_RETURN(AutoencoderModel model, LoadModel(config.ModelPath()));
  ASSIGN_OR_RETURN(SensitivitySource source, ResolveSensitivity(config));
  ASSIGN_OR_RETURN(std::vector<bool> mask, MaskFor(config, model));
  absl::StatusOr<PrivacyParams> params_or =
      absl::InvalidArgumentError("unset");
  if (config.IsSet("noise_level")) {
    ASSIGN_OR_RETURN(double level, config.GetDouble("noise_level"));
    params_or = PrivacyParams::FromNoiseLevel(level, source.delta_f, mask);
  } else {
    ASSIGN_OR_RETURN(double epsilon, config.GetDouble("epsilon"));
    params_or = PrivacyParams::Create(epsilon, source.delta_f, mask);
  }
  RETURN_IF_ERROR(params_or.status());
  const PrivacyParams& params = *params_or;
  ASSIGN_OR_RETURN(uint64_t seed, config.GetU64("seed"));

  // Inputs: every .pgm of input_dir in name order, or the manifest's eval
  // split. Image ids are positions in that order.
  std::vector<std::string> paths;
  if (config.IsSet("input_dir")) {
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(config.Get("input_dir"), ec)) {
      if (entry.path().extension() == ".pgm") paths.push_back(entry.path().string());
    }
    if (ec) {
      return absl::NotFoundError(
          absl::StrCat("cannot list ", config.Get("input_dir"), ": ", ec.message()));
    }
    std::sort(paths.begin(), paths.end());
  } else {
    ASSIGN_OR_RETURN(Dataset data, LoadDataset(config));
    for (const ManifestEntry& e : data.manifest.entries()) {
      if (e.split == Split::kEval) {
        paths.push_back((fs::path(data.base_dir) / e.path).string());
      }
    }
  }
  if (paths.empty()) return absl::NotFoundError("no input images to perturb");
  std::vector<Image> images;
  for (const std::string& p : paths) {
    ASSIGN_OR_RETURN(Image x, ReadPgm(p));
    images.push_back(std::move(x));
  }

  ASSIGN_OR_RETURN(std::vector<Image> released,
                   DpImageBatch(model, images, params, seed, kPerturbTag,
                                OptionsFor(source)));

  const std::string out_dir = config.OutputDir();
  RETURN_IF_ERROR(EnsureDir(Out(config, "perturbed")));
  const std::string ledger_path = Out(config, "ledger.csv");
  PrivacyBudgetLedger ledger;
  if (fs::exists(ledger_path)) {
    ASSIGN_OR_RETURN(ledger, PrivacyBudgetLedger::ReadCsv(ledger_path));
  }
  CsvTable pairs({"image_id", "original", "perturbed"});
  for (size_t i = 0; i < images.size(); ++i) {
    const std::string stem = fs::path(paths[i]).stem().string();
    const fs::path out_path = fs::path(out_dir) / "perturbed" / (stem + ".pgm");
    RETURN_IF_ERROR(WritePgm(released[i], out_path.string()));
    RETURN_IF_ERROR(pairs.AddRow(
        {absl::StrCat(i), fs::proximate(paths[i], out_dir).string(),
         fs::proximate(out_path, out_dir).string()}));
    if (params.adds_noise()) {
      RETURN_IF_ERROR(ledger.RecordRelease(absl::StrCat("perturb/", stem), params,
                                           ReleaseKind::kImage,
                                           config.Get("ledger_group")));
    }
  }
  RETURN_IF_ERROR(pairs.WriteTo(Out(config, "pairs.csv")));
  RETURN_IF_ERROR(ledger.WriteCsv(ledger_path));
  RETURN_IF_ERROR(WriteKeyValues(
      Out(config, "release_summary.csv"),
      {{"images", absl::StrCat(images.size())},
       {"delta_f", FormatDouble(params.sensitivity())},
       {"epsilon", params.adds_noise() ? FormatDouble(params.epsilon()) : "inf"},
       {"scale", FormatDouble(params.scale())},
       {"coverage", params.partial() ? "partial" : "full"},
       {"clip_radius",
        source.clip_radius ? FormatDouble(*source.clip_radius) : "none"},
       {"ledger_total", FormatDouble(ledger.Total())}},
      "key"));
  return WriteProvenance(config, "perturb");
}

absl::Status RunEvaluate(const RunConfig& config) {
  ASSIGN_OR_RETURN(AutoencoderModel model, LoadModel(config.ModelPath()));
  ASSIGN_OR_RETURN(PairSet pairs, ReadPairs(config.PairsPath()));
  ASSIGN_OR_RETURN(SsimOptions ssim, config.Ssim());
  ASSIGN_OR_RETURN(std::vector<std::string> baselines,
                   config.GetStringList("baselines"));
  for (const std::string& b : baselines) {
    if (b != "blur" && b != "mosaic" && b != "none") {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown baseline '", b, "' (blur, mosaic or none)"));
    }
  }
  RETURN_IF_ERROR(EnsureDir(config.OutputDir()));
  ASSIGN_OR_RETURN(double tau, ResolveThreshold(config, model));

  std::vector<TableRow> table;
  ASSIGN_OR_RETURN(MetricsReport dp, EvaluatePairs(model, pairs.ids, pairs.originals,
                                                   pairs.released, tau, ssim));
  const double target = dp.mean_iss;
  for (const std::string& b : baselines) {
    if (b == "blur") {
      ASSIGN_OR_RETURN(double sigma, MatchBlurSigma(model, pairs.originals, target));
      ASSIGN_OR_RETURN(std::vector<Image> blurred, BlurAll(pairs.originals, sigma));
      ASSIGN_OR_RETURN(MetricsReport r, EvaluatePairs(model, pairs.ids, pairs.originals,
                                                      blurred, tau, ssim));
      table.push_back({"blur",
                       absl::StrFormat("sigma=%.4f;radius=%d", sigma,
                                       BlurRadiusFor(sigma)),
                       std::move(r)});
    } else if (b == "mosaic") {
      ASSIGN_OR_RETURN(int block, MatchMosaicBlock(model, pairs.originals, target));
      ASSIGN_OR_RETURN(std::vector<Image> tiles, MosaicAll(pairs.originals, block));
      ASSIGN_OR_RETURN(MetricsReport r, EvaluatePairs(model, pairs.ids, pairs.originals,
                                                      tiles, tau, ssim));
      table.push_back({"mosaic", absl::StrCat("block=", block), std::move(r)});
    }
  }
  table.push_back({"dp_image", ReleaseParam(config), std::move(dp)});

  CsvTable csv({"method", "param", "mean_iss", "mean_l2", "mean_ald_inf",
                "mean_ssim", "fed", "fppsr"});
  const TableRow* lowest_fed = &table.front();
  for (const TableRow& row : table) {
    RETURN_IF_ERROR(WriteMethodReport(config, row));
    const MetricsReport& r = row.report;
    RETURN_IF_ERROR(csv.AddRow({row.method, row.param, FormatDouble(r.mean_iss),
                                FormatDouble(r.mean_l2), FormatDouble(r.mean_ald_inf),
                                FormatDouble(r.mean_ssim), FormatDouble(r.fed),
                                FormatDouble(r.fppsr)}));
    if (r.fed < lowest_fed->report.fed) lowest_fed = &row;
  }
  RETURN_IF_ERROR(csv.WriteTo(Out(config, "table.csv")));
  double max_gap = 0.0;
  for (const TableRow& row : table) {
    max_gap = std::max(max_gap, std::abs(row.report.mean_iss - target));
  }
  RETURN_IF_ERROR(WriteKeyValues(
      Out(config, "evaluate_summary.csv"),
      {{"pairs", absl::StrCat(pairs.ids.size())},
       {"threshold", FormatDouble(tau)},
       {"target_mean_iss", FormatDouble(target)},
       {"max_iss_gap", FormatDouble(max_gap)},
       {"lowest_fed_method", lowest_fed->method}},
      "key"));
  return WriteProvenance(config, "evaluate");
}

absl::Status RunSweep(const RunConfig& config) {
  ASSIGN_OR_RETURN(AutoencoderModel model, LoadModel(config.ModelPath()));
  ASSIGN_OR_RETURN(std::vector<double> levels, config.Levels());
  ASSIGN_OR_RETURN(int repetitions, config.GetInt("repetitions"));
  if (repetitions < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("repetitions must be >= 1, got ", repetitions));
  }
  ASSIGN_OR_RETURN(bool check_trends, config.GetBool("check_trends"));
  ASSIGN_OR_RETURN(SsimOptions ssim, config.Ssim());
  ASSIGN_OR_RETURN(uint64_t seed, config.GetU64("seed"));
  ASSIGN_OR_RETURN(std::vector<bool> mask, MaskFor(config, model));
  ASSIGN_OR_RETURN(Dataset data, LoadDataset(config));
  ASSIGN_OR_RETURN(LabeledImages eval,
                   LoadImages(data.manifest, data.base_dir, Split::kEval));
  RETURN_IF_ERROR(EnsureDir(config.OutputDir()));
  ASSIGN_OR_RETURN(double tau, ResolveThreshold(config, model));

  // Sensitivity is only needed once some level adds noise.
  SensitivitySource source;
  if (levels.back() > 0.0) {
    ASSIGN_OR_RETURN(source, ResolveSensitivity(config));
  }
  const ReleaseOptions options = OptionsFor(source);

  ASSIGN_OR_RETURN(std::vector<LatentVector> codes, EncodeBatch(model, eval.images));
  ASSIGN_OR_RETURN(auto clean_emb, IdentityEmbeddings(model, eval.images));

  PrivacyBudgetLedger ledger;
  CsvTable csv({"level", "mean_iss", "mean_fppsr", "mean_l2", "mean_ssim"});
  std::vector<double> mean_iss(levels.size()), mean_fppsr(levels.size());
  for (size_t li = 0; li < levels.size(); ++li) {
    ASSIGN_OR_RETURN(PrivacyParams params,
                     PrivacyParams::FromNoiseLevel(levels[li], source.delta_f, mask));
    // Without noise every repetition is the same clean reconstruction.
    const int reps = params.adds_noise() ? repetitions : 1;
    std::vector<double> iss_all, fppsr_reps, l2_all, ssim_all;
    for (int r = 0; r < reps; ++r) {
      std::vector<LatentVector> noisy(codes.size());
      for (size_t i = 0; i < codes.size(); ++i) {
        RngStream stream(seed, TaskId(kSweepTag + li, i, static_cast<uint64_t>(r)));
        LatentVector z = codes[i];
        if (options.clip_radius.has_value()) {
          ASSIGN_OR_RETURN(z, ClipLatent(z, *options.clip_radius));
        }
        ASSIGN_OR_RETURN(noisy[i], PerturbLatent(z, params, stream));
        if (params.adds_noise()) {
          RETURN_IF_ERROR(ledger.RecordRelease(
              absl::StrCat("sweep/level", li, "/image", eval.entry_index[i], "/rep", r),
              params, ReleaseKind::kImage, absl::StrCat("image", eval.entry_index[i])));
        }
      }
      ASSIGN_OR_RETURN(std::vector<Image> released, DecodeBatch(model, noisy));
      ASSIGN_OR_RETURN(auto emb, IdentityEmbeddings(model, released));
      std::vector<double> iss(released.size());
      for (size_t i = 0; i < released.size(); ++i) {
        iss[i] = IdentitySimilarity(clean_emb[i], emb[i]);
        ASSIGN_OR_RETURN(double l2, L2Distance(eval.images[i], released[i]));
        ASSIGN_OR_RETURN(double s, Ssim(eval.images[i], released[i], ssim));
        l2_all.push_back(l2);
        ssim_all.push_back(s);
      }
      ASSIGN_OR_RETURN(double fppsr, FppsrFromScores(iss, tau));
      fppsr_reps.push_back(fppsr);
      iss_all.insert(iss_all.end(), iss.begin(), iss.end());
    }
    mean_iss[li] = Mean(iss_all);
    mean_fppsr[li] = Mean(fppsr_reps);
    RETURN_IF_ERROR(csv.AddRow({FormatDouble(levels[li]), FormatDouble(mean_iss[li]),
                                FormatDouble(mean_fppsr[li]),
                                FormatDouble(Mean(l2_all)),
                                FormatDouble(Mean(ssim_all))}));
  }
  RETURN_IF_ERROR(csv.WriteTo(Out(config, "sweep.csv")));
  RETURN_IF_ERROR(ledger.WriteCsv(Out(config, "sweep_ledger.csv")));
  RETURN_IF_ERROR(WriteProvenance(config, "sweep"));

  if (check_trends) {
    for (size_t li = 1; li < levels.size(); ++li) {
      if (!(mean_iss[li] < mean_iss[li - 1])) {
        return absl::FailedPreconditionError(absl::StrCat(
            "trend check failed: mean ISS ", mean_iss[li], " at level ",
            levels[li], " is not below ", mean_iss[li - 1]));
      }
      if (mean_fppsr[li] < mean_fppsr[li - 1]) {
        return absl::FailedPreconditionError(absl::StrCat(
            "trend check failed: mean FPPSR ", mean_fppsr[li], " at level ",
            levels[li], " is below ", mean_fppsr[li - 1]));
      }
    }
  }
  return absl::OkStatus();
}

const std::vector<std::string>& CommandNames() {
  static const auto* names = new std::vector<std::string>{
      "generate", "train", "sensitivity", "perturb", "evaluate", "sweep"};
  return *names;
}

absl::Status RunCommand(absl::string_view verb, const RunConfig& config) {
  if (verb == "generate") return RunGenerate(config);
  if (verb == "train") return RunTrain(config);
  if (verb == "sensitivity") return RunSensitivity(config);
  if (verb == "perturb") return RunPerturb(config);
  if (verb == "evaluate") return RunEvaluate(config);
  if (verb == "sweep") return RunSweep(config);
  return absl::InvalidArgumentError(absl::StrCat("unknown command '", verb, "'"));
}

}  // namespace latentdp
