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
#include "latentdp/data/manifest.h"

#include <algorithm>
#include <filesystem>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "latentdp/base/binary_io.h"
#include "latentdp/base/csv.h"
#include "latentdp/base/status_macros.h"
#include "latentdp/data/pgm.h"

namespace latentdp {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string>& Header() {
  static const auto* header =
      new std::vector<std::string>{"path", "identity_id", "split"};
  return *header;
}

}  // namespace

absl::string_view SplitName(Split split) {
  return split == Split::kTrain ? "train" : "eval";
}

absl::StatusOr<Split> ParseSplit(absl::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "eval") return Split::kEval;
  return absl::InvalidArgumentError(
      absl::StrCat("split must be train or eval, got '", name, "'"));
}

absl::StatusOr<DatasetManifest> DatasetManifest::Create(
    std::vector<ManifestEntry> entries) {
  if (entries.empty()) return absl::InvalidArgumentError("empty manifest");
  int max_id = -1;
  for (const ManifestEntry& e : entries) {
    if (e.identity_id < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("negative identity_id for ", e.path));
    }
    if (e.path.empty()) return absl::InvalidArgumentError("empty path");
    max_id = std::max(max_id, e.identity_id);
  }
  std::vector<bool> seen(static_cast<size_t>(max_id) + 1, false);
  for (const ManifestEntry& e : entries) {
    seen[static_cast<size_t>(e.identity_id)] = true;
  }
  for (size_t id = 0; id < seen.size(); ++id) {
    if (!seen[id]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "identity ids must be dense from 0; missing ", id));
    }
  }
  return DatasetManifest(std::move(entries), max_id + 1);
}

absl::StatusOr<DatasetManifest> DatasetManifest::Parse(absl::string_view text) {
  ASSIGN_OR_RETURN(CsvTable table, CsvTable::Parse(text, &Header()));
  std::vector<ManifestEntry> entries;
  for (const auto& row : table.rows()) {
    ManifestEntry e;
    e.path = row[0];
    ASSIGN_OR_RETURN(e.identity_id, ParseInt(row[1]));
    ASSIGN_OR_RETURN(e.split, ParseSplit(row[2]));
    entries.push_back(std::move(e));
  }
  return Create(std::move(entries));
}

absl::StatusOr<DatasetManifest> DatasetManifest::Read(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFileBytes(path));
  ASSIGN_OR_RETURN(DatasetManifest manifest, Parse(text));
  const fs::path base = fs::path(path).parent_path();
  for (const ManifestEntry& e : manifest.entries()) {
    std::error_code ec;
    if (!fs::is_regular_file(base / e.path, ec)) {
      return absl::NotFoundError(
          absl::StrCat("manifest entry not found: ", (base / e.path).string()));
    }
  }
  return manifest;
}

std::string DatasetManifest::ToCsv() const {
  CsvTable table(Header());
  for (const ManifestEntry& e : entries_) {
    // Entries were validated on construction, so rows always fit.
    table.AddRow({e.path, absl::StrCat(e.identity_id),
                  std::string(SplitName(e.split))})
        .IgnoreError();
  }
  return table.ToString();
}

absl::Status DatasetManifest::Write(const std::string& path) const {
  CsvTable table(Header());
  for (const ManifestEntry& e : entries_) {
    RETURN_IF_ERROR(table.AddRow({e.path, absl::StrCat(e.identity_id),
                                  std::string(SplitName(e.split))}));
  }
  return table.WriteTo(path);
}

absl::StatusOr<LabeledImages> LoadImages(const DatasetManifest& manifest,
                                         const std::string& base_dir,
                                         std::optional<Split> split) {
  LabeledImages out;
  const auto& entries = manifest.entries();
  for (size_t i = 0; i < entries.size(); ++i) {
    const ManifestEntry& e = entries[i];
    if (split.has_value() && e.split != *split) continue;
    ASSIGN_OR_RETURN(Image image,
                     ReadPgm((fs::path(base_dir) / e.path).string()));
    out.images.push_back(std::move(image));
    out.labels.push_back(e.identity_id);
    out.entry_index.push_back(static_cast<int>(i));
  }
  if (out.images.empty()) {
    return absl::NotFoundError("no manifest entries in the requested split");
  }
  return out;
}

absl::StatusOr<DatasetManifest> WriteCorpus(const Corpus& corpus,
                                            const std::string& dir) {
  std::error_code ec;
  fs::create_directories(fs::path(dir) / "faces", ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", dir, "/faces: ", ec.message()));
  }
  std::vector<ManifestEntry> entries;
  for (const FaceSample& s : corpus.samples) {
    ManifestEntry e;
    e.path = absl::StrFormat("faces/id%03d_%02d.pgm", s.identity_id,
                             s.sample_index);
    e.identity_id = s.identity_id;
    e.split = s.split;
    RETURN_IF_ERROR(WritePgm(s.image, (fs::path(dir) / e.path).string()));
    entries.push_back(std::move(e));
  }
  ASSIGN_OR_RETURN(DatasetManifest manifest,
                   DatasetManifest::Create(std::move(entries)));
  RETURN_IF_ERROR(manifest.Write((fs::path(dir) / "manifest.csv").string()));
  return manifest;
}

}  // namespace latentdp
