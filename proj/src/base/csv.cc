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
#include "latentdp/base/csv.h"

#include <charconv>
#include <cmath>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "latentdp/base/binary_io.h"

namespace latentdp {

std::string FormatDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return absl::StrCat(value);
  return std::string(buf, end);
}

absl::Status CsvTable::AddRow(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "csv row has ", row.size(), " fields, header has ", header_.size()));
  }
  for (const std::string& field : row) {
    if (field.find_first_of(",\n\r\"") != std::string::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("csv field needs quoting: ", field));
    }
  }
  rows_.push_back(std::move(row));
  return absl::OkStatus();
}

std::string CsvTable::ToString() const {
  std::string out = absl::StrJoin(header_, ",");
  out.push_back('\n');
  for (const auto& row : rows_) {
    absl::StrAppend(&out, absl::StrJoin(row, ","), "\n");
  }
  return out;
}

absl::Status CsvTable::WriteTo(const std::string& path) const {
  return WriteFileBytes(path, ToString());
}

absl::StatusOr<CsvTable> CsvTable::Parse(
    absl::string_view text, const std::vector<std::string>* expected_header) {
  std::vector<absl::string_view> lines = absl::StrSplit(text, '\n');
  while (!lines.empty() && absl::StripTrailingAsciiWhitespace(lines.back()).empty()) {
    lines.pop_back();
  }
  if (lines.empty()) return absl::InvalidArgumentError("csv has no header");
  auto split = [](absl::string_view line) {
    line = absl::StripSuffix(line, "\r");
    std::vector<std::string> fields = absl::StrSplit(line, ',');
    return fields;
  };
  CsvTable table(split(lines.front()));
  if (expected_header != nullptr && table.header_ != *expected_header) {
    return absl::InvalidArgumentError(
        absl::StrCat("unexpected csv header '", absl::StrJoin(table.header_, ","),
                     "', want '", absl::StrJoin(*expected_header, ","), "'"));
  }
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> row = split(lines[i]);
    if (row.size() != table.header_.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("csv line ", i + 1, " has ", row.size(), " fields"));
    }
    table.rows_.push_back(std::move(row));
  }
  return table;
}

absl::StatusOr<CsvTable> CsvTable::Read(
    const std::string& path, const std::vector<std::string>* expected_header) {
  auto bytes = ReadFileBytes(path);
  if (!bytes.ok()) return bytes.status();
  auto table = Parse(*bytes, expected_header);
  if (!table.ok()) {
    return absl::Status(table.status().code(),
                        absl::StrCat(path, ": ", table.status().message()));
  }
  return table;
}

absl::StatusOr<double> ParseDouble(absl::string_view text) {
  double value = 0.0;
  if (!absl::SimpleAtod(text, &value)) {
    return absl::InvalidArgumentError(absl::StrCat("not a number: '", text, "'"));
  }
  return value;
}

absl::StatusOr<int> ParseInt(absl::string_view text) {
  int value = 0;
  if (!absl::SimpleAtoi(text, &value)) {
    return absl::InvalidArgumentError(
        absl::StrCat("not an integer: '", text, "'"));
  }
  return value;
}

}  // namespace latentdp
