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

#ifndef JSSPBENCH_SOLVER_H_
#define JSSPBENCH_SOLVER_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>

#include "jsspbench/instance.h"

namespace jsspbench {

enum class DispatchRule {
  kShortestProcessingTime,
  kLongestProcessingTime,
  kMostWorkRemaining,
  kFirstInFirstOut,
};

inline constexpr DispatchRule kAllDispatchRules[] = {
    DispatchRule::kShortestProcessingTime,
    DispatchRule::kLongestProcessingTime,
    DispatchRule::kMostWorkRemaining,
    DispatchRule::kFirstInFirstOut,
};

// "spt", "lpt", "mwr", "fifo".
const char* ToString(DispatchRule rule);
std::optional<DispatchRule> ParseDispatchRule(std::string_view text);

using Deadline = std::chrono::steady_clock::time_point;

// Non-delay list scheduling. Repeatedly takes the machine on which some
// operation can start earliest (lowest machine id on ties) and, among the
// operations ready on it at that moment, starts the one preferred by `rule`;
// remaining ties go to the lower job index. FIFO prefers the operation that
// became ready first. The result is always feasible. Instances must be
// well-formed (see ValidateInstance).
Schedule DispatchSchedule(const Instance& instance, DispatchRule rule);

// As above, but gives up and returns nullopt once `deadline` has passed.
std::optional<Schedule> DispatchSchedule(const Instance& instance,
                                         DispatchRule rule, Deadline deadline);

inline constexpr std::size_t kDefaultBruteForceLimit = 10;

// Exact optimal makespan by depth-first enumeration of active schedules
// (Giffler-Thompson branching) with pruning on machine-load and job-length
// bounds. Throws SizeError when the instance has more than
// `op_limit` operations.
Time BruteForceOptimum(const Instance& instance,
                       std::size_t op_limit = kDefaultBruteForceLimit);

}  // namespace jsspbench

#endif  // JSSPBENCH_SOLVER_H_
