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
#include "latentdp/numerics/rng.h"

namespace latentdp {
namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t TaskId(uint64_t a, uint64_t b, uint64_t c) {
  return Mix64(Mix64(Mix64(a + kGolden) ^ (b + 1)) ^ (c + 2));
}

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : state_(stream_id == 0 ? seed : Mix64(seed ^ Mix64(stream_id * kGolden))),
      stream_id_(stream_id) {}

uint64_t RngStream::NextU64() {
  state_ += kGolden;
  return Mix64(state_);
}

double RngStream::UniformOpen() {
  const uint64_t k = NextU64() >> 11;
  if (k == 0) return 0.5;
  return static_cast<double>(k) * 0x1.0p-53 - 0.5;
}

}  // namespace latentdp
