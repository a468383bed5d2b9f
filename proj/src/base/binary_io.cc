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
#include "latentdp/base/binary_io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "absl/strings/str_cat.h"

namespace latentdp {

void ByteWriter::PutBytes(absl::string_view bytes) { bytes_.append(bytes.data(), bytes.size()); }

void ByteWriter::PutU32(uint32_t value) {
  for (int i = 0; i < 4; ++i) {
    bytes_.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
  }
}

void ByteWriter::PutF64(double value) {
  const uint64_t bits = std::bit_cast<uint64_t>(value);
  for (int i = 0; i < 8; ++i) {
    bytes_.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
  }
}

void ByteWriter::PutF64s(std::span<const double> values) {
  for (double v : values) PutF64(v);
}

absl::StatusOr<absl::string_view> ByteReader::GetBytes(size_t n) {
  if (remaining() < n) {
    return absl::DataLossError(
        absl::StrCat("truncated: needed ", n, " bytes at offset ", pos_,
                     ", have ", remaining()));
  }
  absl::string_view out = bytes_.substr(pos_, n);
  pos_ += n;
  return out;
}

absl::StatusOr<uint32_t> ByteReader::GetU32() {
  auto raw = GetBytes(4);
  if (!raw.ok()) return raw.status();
  uint32_t value = 0;
  for (int i = 0; i < 4; ++i) {
    value |= static_cast<uint32_t>(static_cast<unsigned char>((*raw)[i]))
             << (8 * i);
  }
  return value;
}

absl::StatusOr<double> ByteReader::GetF64() {
  auto raw = GetBytes(8);
  if (!raw.ok()) return raw.status();
  uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= static_cast<uint64_t>(static_cast<unsigned char>((*raw)[i]))
            << (8 * i);
  }
  return std::bit_cast<double>(bits);
}

absl::Status ByteReader::GetF64s(std::span<double> out) {
  for (double& v : out) {
    auto value = GetF64();
    if (!value.ok()) return value.status();
    v = *value;
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

absl::Status WriteFileBytes(const std::string& path, absl::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open ", path, " for writing"));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace latentdp
