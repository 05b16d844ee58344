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

#include <algorithm>
#include <vector>

#include "jsspbench/instance.h"

namespace jsspbench {

std::vector<Time> MachineLoads(const Instance& instance) {
  std::vector<Time> load(static_cast<std::size_t>(instance.machine_count()), 0);
  for (const Operation& op : instance.operations()) {
    if (op.machine >= 0 && op.machine < instance.machine_count()) {
      load[static_cast<std::size_t>(op.machine)] += op.duration;
    }
  }
  return load;
}

Time MachineLoadBound(const Instance& instance) {
  const std::vector<Time> load = MachineLoads(instance);
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

Time JobLengthBound(const Instance& instance) {
  Time bound = 0;
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    Time length = 0;
    for (const Operation& op : instance.job(j)) length += op.duration;
    bound = std::max(bound, length);
  }
  return bound;
}

Time TrivialLowerBound(const Instance& instance) {
  return std::max(MachineLoadBound(instance), JobLengthBound(instance));
}

}  // namespace jsspbench
