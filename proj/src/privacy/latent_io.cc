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
#include "latentdp/privacy/latent_io.h"

#include "absl/strings/str_cat.h"
#include "latentdp/base/binary_io.h"
#include "latentdp/base/csv.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {

absl::StatusOr<std::string> SerializeLatents(
    std::span<const LatentVector> latents) {
  const size_t m = latents.empty() ? 0 : latents.front().size();
  ByteWriter w;
  w.PutBytes(kLatentMagic);
  w.PutU32(kLatentVersion);
  w.PutU32(static_cast<uint32_t>(latents.size()));
  w.PutU32(static_cast<uint32_t>(m));
  for (const LatentVector& z : latents) {
    if (z.size() != m) {
      return absl::InvalidArgumentError("latents have mixed lengths");
    }
    w.PutF64s(z.values);
  }
  return w.bytes();
}

absl::StatusOr<std::vector<LatentVector>> ParseLatents(absl::string_view bytes,
                                                       int identity_len) {
  ByteReader r(bytes);
  ASSIGN_OR_RETURN(absl::string_view magic, r.GetBytes(kLatentMagic.size()));
  if (magic != kLatentMagic) {
    return absl::InvalidArgumentError("bad magic: not a latent file");
  }
  ASSIGN_OR_RETURN(uint32_t version, r.GetU32());
  if (version != kLatentVersion) {
    return absl::FailedPreconditionError(absl::StrCat(
        "version mismatch: file has ", version, ", reader supports ",
        kLatentVersion));
  }
  ASSIGN_OR_RETURN(uint32_t count, r.GetU32());
  ASSIGN_OR_RETURN(uint32_t m, r.GetU32());
  if (identity_len < 0 || static_cast<uint32_t>(identity_len) > m) {
    return absl::InvalidArgumentError("identity_len exceeds latent length");
  }
  if (static_cast<uint64_t>(count) * m * 8 > r.remaining()) {
    return absl::DataLossError("truncated: latent payload shorter than header");
  }
  std::vector<LatentVector> out(count);
  for (LatentVector& z : out) {
    z.values.resize(m);
    z.identity_len = identity_len;
    RETURN_IF_ERROR(r.GetF64s(z.values));
  }
  return out;
}

absl::Status WriteLatents(std::span<const LatentVector> latents,
                          const std::string& path) {
  ASSIGN_OR_RETURN(std::string bytes, SerializeLatents(latents));
  return WriteFileBytes(path, bytes);
}

absl::StatusOr<std::vector<LatentVector>> ReadLatents(const std::string& path,
                                                      int identity_len) {
  ASSIGN_OR_RETURN(std::string bytes, ReadFileBytes(path));
  return ParseLatents(bytes, identity_len);
}

absl::Status WriteLatentsCsv(std::span<const LatentVector> latents,
                             const std::string& path) {
  const size_t m = latents.empty() ? 0 : latents.front().size();
  std::vector<std::string> header = {"index"};
  for (size_t i = 0; i < m; ++i) header.push_back(absl::StrCat("z", i));
  CsvTable csv(std::move(header));
  for (size_t k = 0; k < latents.size(); ++k) {
    std::vector<std::string> row = {absl::StrCat(k)};
    for (double v : latents[k].values) row.push_back(FormatDouble(v));
    RETURN_IF_ERROR(csv.AddRow(std::move(row)));
  }
  return csv.WriteTo(path);
}

}  // namespace latentdp
