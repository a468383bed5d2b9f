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
#include "latentdp/metrics/report.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "absl/strings/str_cat.h"
#include "latentdp/base/csv.h"
#include "latentdp/base/status_macros.h"
#include "latentdp/metrics/distortion.h"
#include "latentdp/metrics/fed.h"
#include "latentdp/metrics/identity.h"

namespace latentdp {

absl::StatusOr<MetricsReport> EvaluatePairs(const AutoencoderModel& model,
                                            std::span<const int> image_ids,
                                            std::span<const Image> originals,
                                            std::span<const Image> released,
                                            double threshold,
                                            const SsimOptions& ssim) {
  const size_t n = originals.size();
  if (image_ids.size() != n || released.size() != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ids, originals and releases differ in length: ", image_ids.size(),
        ", ", n, ", ", released.size()));
  }
  if (n < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("a report needs at least 2 pairs, got ", n));
  }
  if (std::set<int>(image_ids.begin(), image_ids.end()).size() != n) {
    return absl::InvalidArgumentError("duplicate image ids");
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return image_ids[a] < image_ids[b]; });

  ASSIGN_OR_RETURN(auto emb_x, IdentityEmbeddings(model, originals));
  ASSIGN_OR_RETURN(auto emb_y, IdentityEmbeddings(model, released));

  MetricsReport report;
  report.threshold = threshold;
  std::vector<double> iss;
  for (size_t i : order) {
    MetricsRow row;
    row.image_id = image_ids[i];
    ASSIGN_OR_RETURN(row.l2, L2Distance(originals[i], released[i]));
    ASSIGN_OR_RETURN(row.ald_inf, AverageLpDistortion(originals[i], released[i],
                                                      NormOrder::Infinity()));
    ASSIGN_OR_RETURN(row.ssim, Ssim(originals[i], released[i], ssim));
    row.iss = IdentitySimilarity(emb_x[i], emb_y[i]);
    iss.push_back(row.iss);
    report.mean_l2 += row.l2;
    report.mean_ald_inf += row.ald_inf;
    report.mean_ssim += row.ssim;
    report.mean_iss += row.iss;
    report.rows.push_back(row);
  }
  const double count = static_cast<double>(n);
  report.mean_l2 /= count;
  report.mean_ald_inf /= count;
  report.mean_ssim /= count;
  report.mean_iss /= count;
  ASSIGN_OR_RETURN(report.fppsr, FppsrFromScores(iss, threshold));
  ASSIGN_OR_RETURN(report.fed, Fed(emb_x, emb_y));
  return report;
}

absl::Status WriteRowsCsv(const MetricsReport& report, const std::string& path) {
  CsvTable csv({"image_id", "l2", "ald_inf", "ssim", "iss"});
  for (const MetricsRow& r : report.rows) {
    RETURN_IF_ERROR(csv.AddRow({absl::StrCat(r.image_id), FormatDouble(r.l2),
                                FormatDouble(r.ald_inf), FormatDouble(r.ssim),
                                FormatDouble(r.iss)}));
  }
  return csv.WriteTo(path);
}

absl::Status WriteAggregateCsv(const MetricsReport& report,
                               const std::string& path) {
  CsvTable csv({"metric", "value"});
  const std::pair<const char*, double> rows[] = {
      {"mean_l2", report.mean_l2},     {"mean_ald_inf", report.mean_ald_inf},
      {"mean_ssim", report.mean_ssim}, {"mean_iss", report.mean_iss},
      {"fed", report.fed},             {"fppsr", report.fppsr},
      {"threshold", report.threshold}};
  for (const auto& [name, value] : rows) {
    RETURN_IF_ERROR(csv.AddRow({name, FormatDouble(value)}));
  }
  return csv.WriteTo(path);
}

}  // namespace latentdp
