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
#include "latentdp/privacy/ledger.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "absl/strings/str_cat.h"
#include "latentdp/base/csv.h"
#include "latentdp/base/status_macros.h"

namespace latentdp {
namespace {

const std::vector<std::string>& LedgerHeader() {
  static const auto* header = new std::vector<std::string>{
      "release_id", "epsilon", "group", "kind", "coverage"};
  return *header;
}

}  // namespace

absl::StatusOr<double> ReleaseCharge(const PrivacyParams& params,
                                     ReleaseKind kind) {
  if (!params.adds_noise()) {
    return absl::FailedPreconditionError(
        "release without noise has no finite privacy charge");
  }
  // An image release is post-processing of the latent release.
  switch (kind) {
    case ReleaseKind::kLatent:
    case ReleaseKind::kImage:
      return params.epsilon();
  }
  return params.epsilon();
}

PrivacyBudgetLedger::PrivacyBudgetLedger(const PrivacyBudgetLedger& other)
    : entries_(other.entries()) {}

PrivacyBudgetLedger& PrivacyBudgetLedger::operator=(
    const PrivacyBudgetLedger& other) {
  if (this == &other) return *this;
  std::vector<LedgerEntry> copy = other.entries();
  std::lock_guard<std::mutex> lock(mu_);
  entries_ = std::move(copy);
  return *this;
}

absl::Status PrivacyBudgetLedger::Record(LedgerEntry entry) {
  if (!(entry.epsilon > 0.0) || !std::isfinite(entry.epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ledger epsilon must be finite and > 0, got ",
                     entry.epsilon));
  }
  std::lock_guard<std::mutex> lock(mu_);
  entries_.push_back(std::move(entry));
  return absl::OkStatus();
}

absl::Status PrivacyBudgetLedger::Record(std::string release_id,
                                         double epsilon, std::string group) {
  return Record(LedgerEntry{std::move(release_id), epsilon, std::move(group),
                            ReleaseKind::kImage, false});
}

absl::Status PrivacyBudgetLedger::RecordRelease(std::string release_id,
                                                const PrivacyParams& params,
                                                ReleaseKind kind,
                                                std::string group) {
  ASSIGN_OR_RETURN(double charge, ReleaseCharge(params, kind));
  return Record(LedgerEntry{std::move(release_id), charge, std::move(group),
                            kind, params.partial()});
}

double PrivacyBudgetLedger::Total() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::map<std::string, double> sums;
  for (const LedgerEntry& e : entries_) sums[e.group] += e.epsilon;
  double total = 0.0;
  for (const auto& [group, sum] : sums) total = std::max(total, sum);
  return total;
}

double PrivacyBudgetLedger::GroupTotal(const std::string& group) const {
  std::lock_guard<std::mutex> lock(mu_);
  double sum = 0.0;
  for (const LedgerEntry& e : entries_) {
    if (e.group == group) sum += e.epsilon;
  }
  return sum;
}

std::vector<LedgerEntry> PrivacyBudgetLedger::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_;
}

size_t PrivacyBudgetLedger::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

absl::Status PrivacyBudgetLedger::WriteCsv(const std::string& path) const {
  CsvTable csv(LedgerHeader());
  for (const LedgerEntry& e : entries()) {
    RETURN_IF_ERROR(csv.AddRow(
        {e.release_id, FormatDouble(e.epsilon), e.group,
         e.kind == ReleaseKind::kLatent ? "latent" : "image",
         e.partial ? "partial" : "full"}));
  }
  return csv.WriteTo(path);
}

absl::StatusOr<PrivacyBudgetLedger> PrivacyBudgetLedger::ReadCsv(
    const std::string& path) {
  ASSIGN_OR_RETURN(CsvTable csv, CsvTable::Read(path, &LedgerHeader()));
  PrivacyBudgetLedger ledger;
  for (const auto& row : csv.rows()) {
    ASSIGN_OR_RETURN(double epsilon, ParseDouble(row[1]));
    if (row[3] != "latent" && row[3] != "image") {
      return absl::InvalidArgumentError(absl::StrCat("bad release kind ", row[3]));
    }
    if (row[4] != "full" && row[4] != "partial") {
      return absl::InvalidArgumentError(absl::StrCat("bad coverage ", row[4]));
    }
    RETURN_IF_ERROR(ledger.Record(LedgerEntry{
        row[0], epsilon, row[2],
        row[3] == "latent" ? ReleaseKind::kLatent : ReleaseKind::kImage,
        row[4] == "partial"}));
  }
  return ledger;
}

}  // namespace latentdp
