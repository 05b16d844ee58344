// Copyright 2026 The jsspbench Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JSSPBENCH_TOOLS_RUN_H_
#define JSSPBENCH_TOOLS_RUN_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jsspbench/formats.h"
#include "jsspbench/known_optima.h"
#include "jsspbench/solver.h"

namespace jsspbench::cli {

enum class Command {
  kGenerateTa,
  kGenerateKo,
  kValidate,
  kStats,
  kSolve,
};

const char* ToString(Command command);
std::optional<Command> ParseCommand(std::string_view text);

// One (machines, operations) configuration of the Known-Optima suite.
struct KnownOptimaGroup {
  MachineId machines = 0;
  std::int64_t ops = 0;
};

// Parses "100x10000,1000x10000". Throws ConfigError.
std::vector<KnownOptimaGroup> ParseKnownOptimaGroups(std::string_view text);

std::vector<KnownOptimaGroup> DefaultKnownOptimaGroups();

struct RunConfig {
  Command command = Command::kValidate;
  BenchmarkKind benchmark = BenchmarkKind::kLargeTa;
  std::filesystem::path root = ".";
  // Restricts traversal (or generation output) to one sub-folder.
  std::optional<std::string> subfolder;
  double timeout_s = 600;
  int workers = 1;
  std::uint64_t seed = 0;
  // Empty means every rule; the best schedule is kept.
  std::vector<DispatchRule> rules;
  // Report directory; defaults to $JSSP_RESULTS_DIR, then <root>/results.
  std::optional<std::filesystem::path> results_dir;
  ParseOptions parse;

  // Generation. Files are spread round-robin over sub-folders "1".."split"
  // unless `subfolder` is set.
  int split = 1;
  int instances_per_group = 10;
  Time duration_low = 1;
  Time duration_high = 99;
  std::vector<KnownOptimaGroup> ko_groups = DefaultKnownOptimaGroups();
  int ko_per_group = 3;
  std::vector<Linking> linkings = {Linking::kShortJobs, Linking::kLongJobs};
  Time makespan = 600000;
  Time min_duration = 2;
  SuccessorGap gap = SuccessorGap::kStrict;
};

// Throws ConfigError on an invalid combination.
void CheckConfig(const RunConfig& config);

// Executes one command. Progress and per-instance lines go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 when any input is malformed
// or any certificate fails, 2 on a configuration error.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct ParsedArgs {
  RunConfig config;
  // Set when parsing stopped early (--help, bad flags): the process exit code.
  std::optional<int> exit_code;
};

// Named flags, or the legacy five positional arguments
//   <solver 0-3> <dataset 0-2> <subfolder> <timeout> <workers>
// which map to the solve command.
ParsedArgs ParseCommandLine(int argc, const char* const* argv,
                            std::ostream& out, std::ostream& err);

}  // namespace jsspbench::cli

#endif  // JSSPBENCH_TOOLS_RUN_H_
