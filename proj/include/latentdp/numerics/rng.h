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

#ifndef LATENTDP_NUMERICS_RNG_H_
#define LATENTDP_NUMERICS_RNG_H_

#include <cstdint>

namespace latentdp {

// Splitmix64 generator. A stream is a plain value: copying it forks an
// identical sequence, so parallel tasks must each construct their own stream
// from (seed, task index) rather than share one.
//
// Not cryptographically secure. Deployments that release images to real
// adversaries should swap in a CSPRNG behind the same interface.
class RngStream {
 public:
  // Stream 0 starts the raw splitmix64 recurrence at `seed`; other stream ids
  // start from a scrambled (seed, stream_id) state.
  explicit RngStream(uint64_t seed, uint64_t stream_id = 0);

  uint64_t NextU64();

  // Uniform on (-0.5, 0.5]. The 53-bit grid value that would land on -0.5
  // is mapped to +0.5 instead.
  double UniformOpen();

  uint64_t state() const { return state_; }
  uint64_t stream_id() const { return stream_id_; }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  uint64_t state_;
  uint64_t stream_id_;
};

// The splitmix64 output finalizer.
uint64_t Mix64(uint64_t z);

// Deterministic task index for nested loops, e.g. (level, image, repetition).
uint64_t TaskId(uint64_t a, uint64_t b, uint64_t c = 0);

}  // namespace latentdp

#endif  // LATENTDP_NUMERICS_RNG_H_
