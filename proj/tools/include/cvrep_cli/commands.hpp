// Copyright 2026 The cvrepeater Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The five cvrep subcommands.
#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "cvrep_cli/config.hpp"

namespace cvrep::cli {

enum class Command { kRateCurve, kOptimize, kMemoryCurve, kCapacity, kMonteCarlo };

const char* command_name(Command c);
std::optional<Command> parse_command(const std::string& name);

// Writes the command output to `out`. Returns the number of records that
// ended in an error; diagnostics go to `diag`. Throws ConfigError when the
// requested format does not suit the command.
std::size_t run_command(Command cmd, const ScenarioConfig& cfg, std::ostream& out, std::ostream& diag);

// run_command into cfg.out_path (standard output when empty). Returns the
// process exit status: 0 clean, 1 if any record errored, 2 for config or
// I/O problems.
int execute(Command cmd, const ScenarioConfig& cfg, std::ostream& diag);

}  // namespace cvrep::cli
