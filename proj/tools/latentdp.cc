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
// Command-line front end: one subcommand per pipeline stage.
//
//   latentdp <command> [--config FILE] [--<key> VALUE ...]
//
// Values come from the built-in defaults, then FILE, then the flags. On
// failure a single line `error: <category>: <message>` goes to stderr and
// the exit status is nonzero.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "latentdp/cli/commands.h"
#include "latentdp/cli/config.h"

namespace {

int Fail(const absl::Status& status) {
  std::cerr << "error: "
            << absl::AsciiStrToLower(absl::StatusCodeToString(status.code()))
            << ": " << status.message() << "\n";
  return status.code() == absl::StatusCode::kInvalidArgument ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private face image release toolkit"};
  app.set_version_flag("--version", std::string(latentdp::kToolkitVersion));
  app.require_subcommand(1);

  std::string config_file;
  std::map<std::string, std::string> overrides;
  for (const std::string& verb : latentdp::CommandNames()) {
    CLI::App* sub = app.add_subcommand(verb, "run the " + verb + " stage");
    sub->add_option("--config", config_file, "key = value file");
    for (const latentdp::ConfigKey& key : latentdp::ConfigKeys()) {
      sub->add_option("--" + std::string(key.name), overrides[key.name],
                      std::string(key.doc) + " [default: " + key.default_value + "]");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return Fail(absl::InvalidArgumentError(e.what()));
  }

  CLI::App* chosen = app.get_subcommands().front();
  latentdp::RunConfig config;
  if (!config_file.empty()) {
    if (absl::Status s = config.LoadFile(config_file); !s.ok()) return Fail(s);
  }
  for (const auto& [name, value] : overrides) {
    if (chosen->count("--" + name) == 0) continue;
    if (absl::Status s = config.Set(name, value); !s.ok()) return Fail(s);
  }
  if (absl::Status s = latentdp::RunCommand(chosen->get_name(), config);
      !s.ok()) {
    return Fail(s);
  }
  return 0;
}
