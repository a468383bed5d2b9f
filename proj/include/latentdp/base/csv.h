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

// Minimal CSV: comma separated, no quoting. Fields that would need quoting
// are rejected on write.

#ifndef LATENTDP_BASE_CSV_H_
#define LATENTDP_BASE_CSV_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace latentdp {

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header)
      : header_(std::move(header)) {}

  absl::Status AddRow(std::vector<std::string> row);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string ToString() const;

  absl::Status WriteTo(const std::string& path) const;

  // Header must match `expected_header` exactly when given.
  static absl::StatusOr<CsvTable> Parse(
      absl::string_view text,
      const std::vector<std::string>* expected_header = nullptr);
  static absl::StatusOr<CsvTable> Read(
      const std::string& path,
      const std::vector<std::string>* expected_header = nullptr);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

absl::StatusOr<double> ParseDouble(absl::string_view text);
absl::StatusOr<int> ParseInt(absl::string_view text);

}  // namespace latentdp

#endif  // LATENTDP_BASE_CSV_H_
