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

// Little-endian byte packing shared by the model and latent file formats.

#ifndef LATENTDP_BASE_BINARY_IO_H_
#define LATENTDP_BASE_BINARY_IO_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace latentdp {

class ByteWriter {
 public:
  void PutBytes(absl::string_view bytes);
  void PutU32(uint32_t value);
  void PutF64(double value);
  void PutF64s(std::span<const double> values);

  const std::string& bytes() const { return bytes_; }

 private:
  std::string bytes_;
};

// Reads fail with DataLoss("truncated ...") when the buffer runs out.
class ByteReader {
 public:
  explicit ByteReader(absl::string_view bytes) : bytes_(bytes) {}

  absl::StatusOr<absl::string_view> GetBytes(size_t n);
  absl::StatusOr<uint32_t> GetU32();
  absl::StatusOr<double> GetF64();
  absl::Status GetF64s(std::span<double> out);

  size_t remaining() const { return bytes_.size() - pos_; }

 private:
  absl::string_view bytes_;
  size_t pos_ = 0;
};

absl::StatusOr<std::string> ReadFileBytes(const std::string& path);
absl::Status WriteFileBytes(const std::string& path, absl::string_view bytes);

}  // namespace latentdp

#endif  // LATENTDP_BASE_BINARY_IO_H_
