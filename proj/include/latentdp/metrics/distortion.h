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

#ifndef LATENTDP_METRICS_DISTORTION_H_
#define LATENTDP_METRICS_DISTORTION_H_

#include "absl/status/statusor.h"
#include "latentdp/codec/image.h"

namespace latentdp {

// Order of an l_p norm: a positive integer, or infinity.
class NormOrder {
 public:
  static NormOrder Infinity() { return NormOrder(0); }
  static absl::StatusOr<NormOrder> Of(int p);

  bool is_infinity() const { return p_ == 0; }
  int p() const { return p_; }

 private:
  explicit NormOrder(int p) : p_(p) {}
  int p_;
};

// Euclidean distance over all pixels.
absl::StatusOr<double> L2Distance(const Image& x, const Image& y);

// ||y - x||_p / ||x||_p over the flattened pixels. An all-zero x is
// rejected.
absl::StatusOr<double> AverageLpDistortion(const Image& x, const Image& y,
                                           NormOrder order);

}  // namespace latentdp

#endif  // LATENTDP_METRICS_DISTORTION_H_
