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
#include "latentdp/codec/model_io.h"

#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "latentdp/base/binary_io.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {
namespace {

// Refuses absurd headers before allocating.
constexpr uint32_t kMaxDims = 64;
constexpr uint32_t kMaxLayerWidth = 1u << 20;

}  // namespace

std::string SerializeModel(const AutoencoderModel& model) {
  ByteWriter w;
  w.PutBytes(kModelMagic);
  w.PutU32(kModelVersion);
  w.PutU32(static_cast<uint32_t>(model.layer_dims().size()));
  for (int d : model.layer_dims()) w.PutU32(static_cast<uint32_t>(d));
  w.PutU32(static_cast<uint32_t>(model.identity_len()));
  for (const DenseLayer& layer : model.layers()) {
    w.PutF64s(layer.weights);
    w.PutF64s(layer.bias);
  }
  return w.bytes();
}

absl::StatusOr<AutoencoderModel> ParseModel(absl::string_view bytes) {
  ByteReader r(bytes);
  ASSIGN_OR_RETURN(absl::string_view magic, r.GetBytes(kModelMagic.size()));
  if (magic != kModelMagic) {
    return absl::InvalidArgumentError("bad magic: not a model file");
  }
  ASSIGN_OR_RETURN(uint32_t version, r.GetU32());
  if (version != kModelVersion) {
    return absl::FailedPreconditionError(absl::StrCat(
        "version mismatch: file has ", version, ", reader supports ",
        kModelVersion));
  }
  ASSIGN_OR_RETURN(uint32_t count, r.GetU32());
  if (count > kMaxDims) {
    return absl::InvalidArgumentError(absl::StrCat("implausible dim count ", count));
  }
  std::vector<int> dims;
  for (uint32_t i = 0; i < count; ++i) {
    ASSIGN_OR_RETURN(uint32_t d, r.GetU32());
    if (d == 0 || d > kMaxLayerWidth) {
      return absl::InvalidArgumentError(absl::StrCat("implausible layer width ", d));
    }
    dims.push_back(static_cast<int>(d));
  }
  ASSIGN_OR_RETURN(uint32_t identity_len, r.GetU32());
  ASSIGN_OR_RETURN(AutoencoderModel model,
                   AutoencoderModel::Create(dims, static_cast<int>(identity_len)));
  for (DenseLayer& layer : model.mutable_layers()) {
    RETURN_IF_ERROR(r.GetF64s(layer.weights));
    RETURN_IF_ERROR(r.GetF64s(layer.bias));
  }
  if (r.remaining() != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat(r.remaining(), " trailing bytes after model"));
  }
  return model;
}

absl::Status SaveModel(const AutoencoderModel& model, const std::string& path) {
  return WriteFileBytes(path, SerializeModel(model));
}

absl::StatusOr<AutoencoderModel> LoadModel(const std::string& path) {
  ASSIGN_OR_RETURN(std::string bytes, ReadFileBytes(path));
  return ParseModel(bytes);
}

}  // namespace latentdp
