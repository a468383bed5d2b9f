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

// Binary (P5) PGM with maxval 255. Pixel byte v maps to v / 255; writing
// rounds to the nearest byte, so a round trip moves a pixel by at most
// 1 / 510.

#ifndef LATENTDP_DATA_PGM_H_
#define LATENTDP_DATA_PGM_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "latentdp/codec/image.h"

namespace latentdp {

// Header is exactly "P5\n<w> <h>\n255\n".
std::string EncodePgm(const Image& image);

// Accepts '#' comments and any whitespace between header fields.
// Errors: anything but "P5" is InvalidArgument("bad magic ..."), a maxval
// other than 255 is Unimplemented("bad maxval ..."), short pixel data is
// DataLoss("truncated ...").
absl::StatusOr<Image> DecodePgm(absl::string_view bytes);

absl::Status WritePgm(const Image& image, const std::string& path);
absl::StatusOr<Image> ReadPgm(const std::string& path);

}  // namespace latentdp

#endif  // LATENTDP_DATA_PGM_H_
