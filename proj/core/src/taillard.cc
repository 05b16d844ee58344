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

#include "jsspbench/taillard.h"

#include <numeric>
#include <string>
#include <vector>

#include "jsspbench/errors.h"
#include "jsspbench/formats.h"
#include "jsspbench/random.h"

namespace jsspbench {

void CheckConfig(const TaillardConfig& config) {
  if (config.job_count < 1) throw ConfigError("job_count must be positive");
  if (config.machine_count < 1) {
    throw ConfigError("machine_count must be positive");
  }
  if (config.duration_low < 1) {
    throw ConfigError("duration_low must be positive");
  }
  if (config.duration_high < config.duration_low) {
    throw ConfigError("duration_high must be >= duration_low");
  }
}

Instance GenerateRectangular(const TaillardConfig& config) {
  CheckConfig(config);
  const auto machines = static_cast<std::size_t>(config.machine_count);
  const auto jobs = static_cast<std::size_t>(config.job_count);

  Rng rng(config.seed);
  std::vector<Operation> ops(jobs * machines);
  std::vector<std::size_t> offsets(jobs + 1);
  std::vector<MachineId> route(machines);
  for (std::size_t j = 0; j < jobs; ++j) {
    offsets[j] = j * machines;
    std::iota(route.begin(), route.end(), 0);
    rng.Shuffle(std::span<MachineId>(route));
    for (std::size_t k = 0; k < machines; ++k) {
      ops[j * machines + k] = {
          route[k], rng.UniformInt(config.duration_low, config.duration_high)};
    }
  }
  offsets[jobs] = jobs * machines;
  return Instance(InstanceKind::kRectangular, config.machine_count,
                  std::move(ops), std::move(offsets));
}

std::vector<LargeTaEntry> PlanLargeTaSuite(int instances_per_group,
                                           std::uint64_t base_seed,
                                           Time duration_low,
                                           Time duration_high) {
  if (instances_per_group < 1) {
    throw ConfigError("instances_per_group must be positive");
  }
  std::vector<LargeTaEntry> plan;
  plan.reserve(9 * static_cast<std::size_t>(instances_per_group));
  for (const std::int64_t machines : kLargeTaSizes) {
    for (const std::int64_t jobs : kLargeTaSizes) {
      for (int index = 1; index <= instances_per_group; ++index) {
        TaillardConfig config;
        config.job_count = jobs;
        config.machine_count = static_cast<MachineId>(machines);
        config.duration_low = duration_low;
        config.duration_high = duration_high;
        config.seed = DeriveSeed(base_seed, static_cast<std::uint64_t>(machines),
                                 static_cast<std::uint64_t>(jobs),
                                 static_cast<std::uint64_t>(index));
        CheckConfig(config);
        plan.push_back({LargeTaFileName({jobs, machines, index}), config});
      }
    }
  }
  return plan;
}

std::vector<NamedInstance> GenerateLargeTaSuite(int instances_per_group,
                                                std::uint64_t base_seed) {
  std::vector<NamedInstance> suite;
  for (const LargeTaEntry& entry :
       PlanLargeTaSuite(instances_per_group, base_seed)) {
    suite.push_back({entry.name, GenerateRectangular(entry.config)});
  }
  return suite;
}

}  // namespace jsspbench
