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

// Append-only record of epsilon spent per release.
//
// Releases in the same group touch the same data and compose sequentially
// (their epsilons add). Different groups are disjoint data and compose in
// parallel, so the overall spend is the largest group total.

#ifndef LATENTDP_PRIVACY_LEDGER_H_
#define LATENTDP_PRIVACY_LEDGER_H_

#include <mutex>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "latentdp/privacy/privacy_params.h"

namespace latentdp {

enum class ReleaseKind { kLatent, kImage };

struct LedgerEntry {
  std::string release_id;
  double epsilon = 0.0;
  std::string group;
  ReleaseKind kind = ReleaseKind::kImage;
  // Only part of the latent coordinates were noised; the guarantee holds on
  // that subspace only.
  bool partial = false;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

// Epsilon charged for releasing the output of a mechanism run with
// `params`. Decoding the noisy code is post-processing, so both kinds cost
// the same. Params that add no noise are rejected: their release has no
// finite epsilon.
absl::StatusOr<double> ReleaseCharge(const PrivacyParams& params,
                                     ReleaseKind kind);

class PrivacyBudgetLedger {
 public:
  PrivacyBudgetLedger() = default;
  PrivacyBudgetLedger(const PrivacyBudgetLedger& other);
  PrivacyBudgetLedger& operator=(const PrivacyBudgetLedger& other);

  // Rejects non-positive or non-finite epsilon. Safe to call concurrently.
  absl::Status Record(LedgerEntry entry);
  absl::Status Record(std::string release_id, double epsilon,
                      std::string group);
  // Charges ReleaseCharge(params, kind) and marks partial-mask releases.
  absl::Status RecordRelease(std::string release_id, const PrivacyParams& params,
                             ReleaseKind kind, std::string group);

  // Max over groups of the summed epsilons in each group; 0 when empty.
  double Total() const;
  double GroupTotal(const std::string& group) const;

  std::vector<LedgerEntry> entries() const;
  size_t size() const;

  // CSV `release_id,epsilon,group,kind,coverage`.
  absl::Status WriteCsv(const std::string& path) const;
  static absl::StatusOr<PrivacyBudgetLedger> ReadCsv(const std::string& path);

 private:
  mutable std::mutex mu_;
  std::vector<LedgerEntry> entries_;
};

}  // namespace latentdp

#endif  // LATENTDP_PRIVACY_LEDGER_H_
