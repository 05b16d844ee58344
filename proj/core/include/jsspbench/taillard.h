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

#ifndef JSSPBENCH_TAILLARD_H_
#define JSSPBENCH_TAILLARD_H_

#include <cstdint>
#include <string>
#include <vector>

#include "jsspbench/instance.h"

namespace jsspbench {

// Rectangular (Large-TA) instance parameters. Durations are drawn uniformly
// from [duration_low, duration_high]; [1, 99] is Taillard's classical range.
struct TaillardConfig {
  std::int64_t job_count = 10;
  MachineId machine_count = 10;
  Time duration_low = 1;
  Time duration_high = 99;
  std::uint64_t seed = 0;
};

// Throws ConfigError when a field is out of range.
void CheckConfig(const TaillardConfig& config);

// Each job receives an independent uniform permutation of all machines and
// independent uniform durations. Deterministic in `config`.
Instance GenerateRectangular(const TaillardConfig& config);

struct LargeTaEntry {
  std::string name;  // tai_j<jobs>_m<machines>_<index>.data
  TaillardConfig config;
};

// The 9 size groups {10, 100, 1000} machines x {10, 100, 1000} jobs.
inline constexpr std::int64_t kLargeTaSizes[] = {10, 100, 1000};

// The suite as a list of names and configurations, without generating
// anything. Seeds are DeriveSeed(base_seed, machines, jobs, index).
std::vector<LargeTaEntry> PlanLargeTaSuite(int instances_per_group,
                                           std::uint64_t base_seed,
                                           Time duration_low = 1,
                                           Time duration_high = 99);

struct NamedInstance {
  std::string name;
  Instance instance;
};

// Generates every instance of PlanLargeTaSuite. The full default suite holds
// ten million-operation instances; prefer PlanLargeTaSuite plus
// GenerateRectangular when streaming to disk.
std::vector<NamedInstance> GenerateLargeTaSuite(int instances_per_group = 10,
                                                std::uint64_t base_seed = 0);

}  // namespace jsspbench

#endif  // JSSPBENCH_TAILLARD_H_
