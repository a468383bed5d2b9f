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
#include "latentdp/cli/config.h"

#include <cmath>
#include <filesystem>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "latentdp/base/binary_io.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {
namespace {

namespace fs = std::filesystem;

std::string InDir(const std::string& dir, const char* name) {
  return (fs::path(dir) / name).string();
}

}  // namespace

const std::vector<ConfigKey>& ConfigKeys() {
  static const auto* keys = new std::vector<ConfigKey>{
      {"seed", "1", "master seed; every random stream derives from it"},
      {"output_dir", "out", "directory for all command outputs"},
      // generate
      {"image_side", "32", "face image side in pixels (>= 16)"},
      {"n_identities", "50", "number of synthetic identities"},
      {"samples_per_identity", "10", "images per identity"},
      {"eval_per_identity", "2", "last samples of each identity held out"},
      {"jitter_px", "1", "face center jitter in pixels (<= 2)"},
      {"noise_std", "0.01", "additive pixel noise std (<= 0.02)"},
      // train
      {"latent_dim", "32", "latent code length m"},
      {"identity_len", "12", "leading latent coordinates forming the identity block"},
      {"hidden_dims", "256,64", "encoder hidden widths; the decoder mirrors them"},
      {"epochs", "60", "training epochs (>= 1)"},
      {"batch_size", "4", "minibatch size"},
      {"learning_rate", "2.0", "gradient step size"},
      {"momentum", "0.9", "momentum in [0, 1)"},
      {"init_scale", "2.0", "initial weights uniform in +-init_scale/sqrt(fan_in)"},
      // privacy
      {"sensitivity_mode", "empirical", "empirical (max pairwise l1) or clip (2 * clip_radius)"},
      {"sensitivity_split", "eval", "split whose latents define the empirical sensitivity: eval, train or all"},
      {"clip_radius", "", "l1 radius B for clip mode"},
      {"delta_f", "", "sensitivity override; empty reads sensitivity.cfg in output_dir"},
      {"epsilon", "1.0", "privacy budget per released image"},
      {"noise_level", "", "noise scale delta_f/epsilon; when set it replaces epsilon"},
      {"mask_mode", "all", "all or identity_only (noise the identity block only)"},
      {"ledger_group", "corpus", "disjointness group charged by perturb"},
      {"input_dir", "", "perturb every .pgm here instead of the manifest eval split"},
      // metrics
      {"ssim_window", "11", "SSIM Gaussian window side"},
      {"ssim_sigma", "1.5", "SSIM Gaussian window sigma"},
      {"fppsr_percentile", "95", "impostor ISS percentile used as the threshold"},
      {"threshold", "", "fixed ISS threshold; empty calibrates from impostor pairs"},
      {"baselines", "blur,mosaic", "baselines added to the evaluate table (blur, mosaic or none)"},
      // sweep
      {"levels", "0,0.25,0.5,1", "noise levels delta_f/epsilon, ascending"},
      {"repetitions", "100", "perturbations per eval image and level"},
      {"check_trends", "false", "fail the sweep unless ISS decreases and FPPSR does not"},
      // paths
      {"model", "", "model file; empty means <output_dir>/model.dpim"},
      {"manifest", "", "dataset manifest; empty means <output_dir>/manifest.csv"},
      {"pairs", "", "evaluate input; empty means <output_dir>/pairs.csv"},
  };
  return *keys;
}

RunConfig::RunConfig() {
  for (const ConfigKey& k : ConfigKeys()) values_[k.name] = k.default_value;
}

absl::Status RunConfig::Set(absl::string_view key, absl::string_view value) {
  auto it = values_.find(key);
  if (it == values_.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown config key '", key, "'"));
  }
  it->second = std::string(absl::StripAsciiWhitespace(value));
  return absl::OkStatus();
}

absl::Status RunConfig::ApplyText(absl::string_view text) {
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != absl::string_view::npos) line = line.substr(0, hash);
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_no, ": expected key = value"));
    }
    RETURN_IF_ERROR(Set(absl::StripAsciiWhitespace(line.substr(0, eq)),
                        line.substr(eq + 1)));
  }
  return absl::OkStatus();
}

absl::Status RunConfig::LoadFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFileBytes(path));
  absl::Status s = ApplyText(text);
  if (!s.ok()) {
    return absl::Status(s.code(), absl::StrCat(path, ": ", s.message()));
  }
  return absl::OkStatus();
}

std::string RunConfig::ToText() const {
  std::string out;
  for (const ConfigKey& k : ConfigKeys()) {
    absl::StrAppend(&out, k.name, " = ", Get(k.name), "\n");
  }
  return out;
}

std::string RunConfig::Get(absl::string_view key) const {
  auto it = values_.find(key);
  return it == values_.end() ? std::string() : it->second;
}

absl::StatusOr<int> RunConfig::GetInt(absl::string_view key) const {
  int v;
  if (!absl::SimpleAtoi(Get(key), &v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("config key '", key, "' must be an integer, got '",
                     Get(key), "'"));
  }
  return v;
}

absl::StatusOr<uint64_t> RunConfig::GetU64(absl::string_view key) const {
  uint64_t v;
  if (!absl::SimpleAtoi(Get(key), &v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("config key '", key,
                     "' must be a non-negative integer, got '", Get(key), "'"));
  }
  return v;
}

absl::StatusOr<double> RunConfig::GetDouble(absl::string_view key) const {
  double v;
  if (!absl::SimpleAtod(Get(key), &v) || !std::isfinite(v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("config key '", key, "' must be a finite number, got '",
                     Get(key), "'"));
  }
  return v;
}

absl::StatusOr<bool> RunConfig::GetBool(absl::string_view key) const {
  bool v;
  if (!absl::SimpleAtob(Get(key), &v)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "config key '", key, "' must be true or false, got '", Get(key), "'"));
  }
  return v;
}

absl::StatusOr<std::vector<std::string>> RunConfig::GetStringList(
    absl::string_view key) const {
  std::vector<std::string> out;
  for (absl::string_view part :
       absl::StrSplit(Get(key), ',', absl::SkipWhitespace())) {
    out.emplace_back(absl::StripAsciiWhitespace(part));
  }
  return out;
}

absl::StatusOr<std::vector<int>> RunConfig::GetIntList(
    absl::string_view key) const {
  ASSIGN_OR_RETURN(std::vector<std::string> parts, GetStringList(key));
  std::vector<int> out;
  for (const std::string& p : parts) {
    int v;
    if (!absl::SimpleAtoi(p, &v)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "config key '", key, "' must list integers, got '", p, "'"));
    }
    out.push_back(v);
  }
  return out;
}

absl::StatusOr<std::vector<double>> RunConfig::GetDoubleList(
    absl::string_view key) const {
  ASSIGN_OR_RETURN(std::vector<std::string> parts, GetStringList(key));
  std::vector<double> out;
  for (const std::string& p : parts) {
    double v;
    if (!absl::SimpleAtod(p, &v) || !std::isfinite(v)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "config key '", key, "' must list numbers, got '", p, "'"));
    }
    out.push_back(v);
  }
  return out;
}

absl::StatusOr<std::optional<double>> RunConfig::GetOptionalDouble(
    absl::string_view key) const {
  if (!IsSet(key)) return std::optional<double>();
  ASSIGN_OR_RETURN(double v, GetDouble(key));
  return std::optional<double>(v);
}

absl::StatusOr<TrainConfig> RunConfig::Train() const {
  TrainConfig c;
  ASSIGN_OR_RETURN(c.epochs, GetInt("epochs"));
  ASSIGN_OR_RETURN(c.batch_size, GetInt("batch_size"));
  ASSIGN_OR_RETURN(c.learning_rate, GetDouble("learning_rate"));
  ASSIGN_OR_RETURN(c.momentum, GetDouble("momentum"));
  ASSIGN_OR_RETURN(c.init_scale, GetDouble("init_scale"));
  ASSIGN_OR_RETURN(c.seed, GetU64("seed"));
  ASSIGN_OR_RETURN(c.hidden_dims, GetIntList("hidden_dims"));
  ASSIGN_OR_RETURN(c.latent_dim, GetInt("latent_dim"));
  ASSIGN_OR_RETURN(c.identity_len, GetInt("identity_len"));
  RETURN_IF_ERROR(c.Validate());
  return c;
}

absl::StatusOr<CorpusOptions> RunConfig::Corpus() const {
  CorpusOptions o;
  ASSIGN_OR_RETURN(o.n_identities, GetInt("n_identities"));
  ASSIGN_OR_RETURN(o.samples_per_identity, GetInt("samples_per_identity"));
  ASSIGN_OR_RETURN(o.eval_per_identity, GetInt("eval_per_identity"));
  ASSIGN_OR_RETURN(o.side, GetInt("image_side"));
  ASSIGN_OR_RETURN(o.seed, GetU64("seed"));
  ASSIGN_OR_RETURN(o.jitter_px, GetDouble("jitter_px"));
  ASSIGN_OR_RETURN(o.noise_std, GetDouble("noise_std"));
  RETURN_IF_ERROR(o.Validate());
  return o;
}

absl::StatusOr<SsimOptions> RunConfig::Ssim() const {
  SsimOptions o;
  ASSIGN_OR_RETURN(o.window, GetInt("ssim_window"));
  ASSIGN_OR_RETURN(o.sigma, GetDouble("ssim_sigma"));
  if (o.window < 1 || o.window % 2 == 0 || !(o.sigma > 0.0)) {
    return absl::InvalidArgumentError(
        "ssim_window must be odd and positive, ssim_sigma positive");
  }
  return o;
}

absl::StatusOr<SensitivityMode> RunConfig::Sensitivity() const {
  const std::string v = Get("sensitivity_mode");
  if (v == "empirical") return SensitivityMode::kEmpirical;
  if (v == "clip") return SensitivityMode::kClip;
  return absl::InvalidArgumentError(absl::StrCat(
      "sensitivity_mode must be empirical or clip, got '", v, "'"));
}

absl::StatusOr<MaskMode> RunConfig::Mask() const {
  const std::string v = Get("mask_mode");
  if (v == "all") return MaskMode::kAll;
  if (v == "identity_only") return MaskMode::kIdentityOnly;
  return absl::InvalidArgumentError(absl::StrCat(
      "mask_mode must be all or identity_only, got '", v, "'"));
}

absl::StatusOr<std::vector<double>> RunConfig::Levels() const {
  ASSIGN_OR_RETURN(std::vector<double> levels, GetDoubleList("levels"));
  if (levels.empty()) return absl::InvalidArgumentError("levels is empty");
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 0.0 || (i > 0 && levels[i] <= levels[i - 1])) {
      return absl::InvalidArgumentError(
          "levels must be nonnegative and strictly ascending");
    }
  }
  return levels;
}

std::string RunConfig::ModelPath() const {
  return IsSet("model") ? Get("model") : InDir(OutputDir(), "model.dpim");
}

std::string RunConfig::ManifestPath() const {
  return IsSet("manifest") ? Get("manifest")
                           : InDir(OutputDir(), "manifest.csv");
}

std::string RunConfig::PairsPath() const {
  return IsSet("pairs") ? Get("pairs") : InDir(OutputDir(), "pairs.csv");
}

}  // namespace latentdp
