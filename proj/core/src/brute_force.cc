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
#include <limits>
#include <string>
#include <vector>

#include "jsspbench/errors.h"
#include "jsspbench/solver.h"

namespace jsspbench {
namespace {

// Depth-first Giffler-Thompson enumeration. Every active schedule is reached,
// and an optimal schedule is always active.
class ActiveScheduleSearch {
 public:
  explicit ActiveScheduleSearch(const Instance& instance)
      : instance_(instance),
        ops_(instance.operations()),
        next_(instance.job_count()),
        job_ready_(instance.job_count(), 0),
        job_left_(instance.job_count(), 0),
        machine_free_(static_cast<std::size_t>(instance.machine_count()), 0),
        machine_left_(static_cast<std::size_t>(instance.machine_count()), 0) {
    for (std::size_t j = 0; j < instance.job_count(); ++j) {
      next_[j] = instance.job_begin(j);
      for (const Operation& op : instance.job(j)) {
        job_left_[j] += op.duration;
        machine_left_[static_cast<std::size_t>(op.machine)] += op.duration;
      }
    }
  }

  Time Run() {
    Search(0, 0);
    return best_;
  }

 private:
  Time LowerBound(Time makespan) const {
    Time bound = makespan;
    for (std::size_t m = 0; m < machine_free_.size(); ++m) {
      if (machine_left_[m] > 0) {
        bound = std::max(bound, machine_free_[m] + machine_left_[m]);
      }
    }
    for (std::size_t j = 0; j < next_.size(); ++j) {
      if (job_left_[j] > 0) bound = std::max(bound, job_ready_[j] + job_left_[j]);
    }
    return bound;
  }

  Time EarliestStart(std::size_t j) const {
    const Operation& op = ops_[next_[j]];
    return std::max(job_ready_[j],
                    machine_free_[static_cast<std::size_t>(op.machine)]);
  }

  bool Done(std::size_t j) const { return next_[j] == instance_.job_begin(j + 1); }

  void Search(std::size_t placed, Time makespan) {
    if (placed == ops_.size()) {
      best_ = std::min(best_, makespan);
      return;
    }
    if (LowerBound(makespan) >= best_) return;

    // Operation with the earliest completion decides the machine in conflict.
    Time earliest_end = std::numeric_limits<Time>::max();
    MachineId machine = 0;
    for (std::size_t j = 0; j < next_.size(); ++j) {
      if (Done(j)) continue;
      const Time end = EarliestStart(j) + ops_[next_[j]].duration;
      if (end < earliest_end) {
        earliest_end = end;
        machine = ops_[next_[j]].machine;
      }
    }
    const auto m = static_cast<std::size_t>(machine);
    for (std::size_t j = 0; j < next_.size(); ++j) {
      if (Done(j) || ops_[next_[j]].machine != machine) continue;
      const Time start = EarliestStart(j);
      if (start >= earliest_end) continue;

      const Operation& op = ops_[next_[j]];
      const Time end = start + op.duration;
      const Time saved_job_ready = job_ready_[j];
      const Time saved_machine_free = machine_free_[m];
      job_ready_[j] = end;
      machine_free_[m] = end;
      job_left_[j] -= op.duration;
      machine_left_[m] -= op.duration;
      ++next_[j];

      Search(placed + 1, std::max(makespan, end));

      --next_[j];
      machine_left_[m] += op.duration;
      job_left_[j] += op.duration;
      machine_free_[m] = saved_machine_free;
      job_ready_[j] = saved_job_ready;
    }
  }

  const Instance& instance_;
  std::span<const Operation> ops_;
  std::vector<std::size_t> next_;
  std::vector<Time> job_ready_;
  std::vector<Time> job_left_;
  std::vector<Time> machine_free_;
  std::vector<Time> machine_left_;
  Time best_ = std::numeric_limits<Time>::max();
};

}  // namespace

Time BruteForceOptimum(const Instance& instance, std::size_t op_limit) {
  if (instance.operation_count() > op_limit) {
    throw SizeError("instance has " + std::to_string(instance.operation_count()) +
                    " operations; exhaustive search is limited to " +
                    std::to_string(op_limit));
  }
  if (instance.operation_count() == 0) return 0;
  return ActiveScheduleSearch(instance).Run();
}

}  // namespace jsspbench
