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

// The pipeline verbs. Each reads what it needs from the run configuration,
// writes its outputs under output_dir and drops a provenance_<verb>.cfg
// there that can be fed back with --config to replay the run.
//
//   generate     faces/*.pgm, manifest.csv
//   train        model.dpim, loss_trace.csv, train_summary.csv
//   sensitivity  sensitivity.cfg, sensitivity_{histogram,heatmap,summary}.csv,
//                latents.dplz, latents.csv
//   perturb      perturbed/*.pgm, pairs.csv, ledger.csv, release_summary.csv
//   evaluate     metrics_<method>.csv, aggregate_<method>.csv, table.csv,
//                evaluate_summary.csv
//   sweep        sweep.csv, sweep_ledger.csv
//
// evaluate and sweep also write threshold_calibration.csv and
// iss_heatmap.csv when they calibrate the ISS threshold themselves.

#ifndef LATENTDP_CLI_COMMANDS_H_
#define LATENTDP_CLI_COMMANDS_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"
#include "latentdp/cli/config.h"

namespace latentdp {

absl::Status RunGenerate(const RunConfig& config);
absl::Status RunTrain(const RunConfig& config);
absl::Status RunSensitivity(const RunConfig& config);
absl::Status RunPerturb(const RunConfig& config);
absl::Status RunEvaluate(const RunConfig& config);
absl::Status RunSweep(const RunConfig& config);

const std::vector<std::string>& CommandNames();
absl::Status RunCommand(absl::string_view verb, const RunConfig& config);

}  // namespace latentdp

#endif  // LATENTDP_CLI_COMMANDS_H_
