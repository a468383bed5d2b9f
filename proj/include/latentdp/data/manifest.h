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

// Dataset manifest: CSV `path,identity_id,split` with split in {train,eval}.
// Paths are relative to the directory holding the manifest.

#ifndef LATENTDP_DATA_MANIFEST_H_
#define LATENTDP_DATA_MANIFEST_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "latentdp/codec/image.h"
#include "latentdp/data/faces.h"

namespace latentdp {

struct ManifestEntry {
  std::string path;
  int identity_id = 0;
  Split split = Split::kTrain;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

absl::string_view SplitName(Split split);
absl::StatusOr<Split> ParseSplit(absl::string_view name);

class DatasetManifest {
 public:
  // Identity ids must be dense from 0: every id in [0, max] appears.
  static absl::StatusOr<DatasetManifest> Create(
      std::vector<ManifestEntry> entries);

  static absl::StatusOr<DatasetManifest> Parse(absl::string_view text);
  // Also checks that every listed file exists.
  static absl::StatusOr<DatasetManifest> Read(const std::string& path);

  std::string ToCsv() const;
  absl::Status Write(const std::string& path) const;

  const std::vector<ManifestEntry>& entries() const { return entries_; }
  int num_identities() const { return num_identities_; }

 private:
  DatasetManifest(std::vector<ManifestEntry> entries, int num_identities)
      : entries_(std::move(entries)), num_identities_(num_identities) {}

  std::vector<ManifestEntry> entries_;
  int num_identities_ = 0;
};

struct LabeledImages {
  std::vector<Image> images;
  std::vector<int> labels;
  // Index into manifest.entries() for each image.
  std::vector<int> entry_index;
};

// Loads the PGM files of one split, or of every split when `split` is empty.
// `base_dir` is the directory the manifest paths are relative to.
absl::StatusOr<LabeledImages> LoadImages(const DatasetManifest& manifest,
                                         const std::string& base_dir,
                                         std::optional<Split> split);

// Writes every sample as `<dir>/faces/id<identity>_<sample>.pgm` and the
// manifest as `<dir>/manifest.csv`; returns the manifest.
absl::StatusOr<DatasetManifest> WriteCorpus(const Corpus& corpus,
                                            const std::string& dir);

}  // namespace latentdp

#endif  // LATENTDP_DATA_MANIFEST_H_
