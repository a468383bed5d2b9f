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

// Flat key = value run configuration.
//
// Every key has a documented default; reading a file or applying an
// override with an unknown key is an error that names the key. Later
// sources win: defaults, then a config file, then command-line overrides.

#ifndef LATENTDP_CLI_CONFIG_H_
#define LATENTDP_CLI_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "latentdp/codec/autoencoder.h"
#include "latentdp/data/faces.h"
#include "latentdp/metrics/ssim.h"

namespace latentdp {

inline constexpr absl::string_view kToolkitVersion = "1.0.0";

struct ConfigKey {
  const char* name;
  const char* default_value;
  const char* doc;
};

// In canonical order; this is also the order of ToText().
const std::vector<ConfigKey>& ConfigKeys();

enum class SensitivityMode { kEmpirical, kClip };
enum class MaskMode { kAll, kIdentityOnly };

class RunConfig {
 public:
  RunConfig();

  absl::Status Set(absl::string_view key, absl::string_view value);
  // `key = value` lines; '#' starts a comment; blank lines are skipped.
  absl::Status ApplyText(absl::string_view text);
  absl::Status LoadFile(const std::string& path);

  // Every key in canonical order, one `key = value` line each.
  std::string ToText() const;

  std::string Get(absl::string_view key) const;
  bool IsSet(absl::string_view key) const { return !Get(key).empty(); }

  absl::StatusOr<int> GetInt(absl::string_view key) const;
  absl::StatusOr<uint64_t> GetU64(absl::string_view key) const;
  absl::StatusOr<double> GetDouble(absl::string_view key) const;
  absl::StatusOr<bool> GetBool(absl::string_view key) const;
  // Comma-separated; empty value gives an empty list.
  absl::StatusOr<std::vector<int>> GetIntList(absl::string_view key) const;
  absl::StatusOr<std::vector<double>> GetDoubleList(
      absl::string_view key) const;
  absl::StatusOr<std::vector<std::string>> GetStringList(
      absl::string_view key) const;
  // Unset optional numeric keys give nullopt.
  absl::StatusOr<std::optional<double>> GetOptionalDouble(
      absl::string_view key) const;

  absl::StatusOr<TrainConfig> Train() const;
  absl::StatusOr<CorpusOptions> Corpus() const;
  absl::StatusOr<SsimOptions> Ssim() const;
  absl::StatusOr<SensitivityMode> Sensitivity() const;
  absl::StatusOr<MaskMode> Mask() const;
  // Noise levels: nonnegative and strictly ascending.
  absl::StatusOr<std::vector<double>> Levels() const;

  // Paths with their documented fallbacks inside output_dir.
  std::string OutputDir() const { return Get("output_dir"); }
  std::string ModelPath() const;
  std::string ManifestPath() const;
  std::string PairsPath() const;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

}  // namespace latentdp

#endif  // LATENTDP_CLI_CONFIG_H_
