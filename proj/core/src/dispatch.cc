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
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "jsspbench/solver.h"

namespace jsspbench {
namespace {

constexpr Time kNever = std::numeric_limits<Time>::max();
constexpr std::size_t kDeadlineStride = 4096;

// An operation waiting for its machine, identified by its job; a job has at
// most one operation waiting at any time.
struct Waiting {
  Time key = 0;
  std::uint32_t job = 0;
};

// Min-heap on (key, job).
struct LaterFirst {
  bool operator()(const Waiting& a, const Waiting& b) const {
    return a.key != b.key ? a.key > b.key : a.job > b.job;
  }
};

class Heap {
 public:
  bool empty() const { return items_.empty(); }
  const Waiting& top() const { return items_.front(); }
  void push(Waiting w) {
    items_.push_back(w);
    std::push_heap(items_.begin(), items_.end(), LaterFirst());
  }
  Waiting pop() {
    std::pop_heap(items_.begin(), items_.end(), LaterFirst());
    const Waiting w = items_.back();
    items_.pop_back();
    return w;
  }

 private:
  std::vector<Waiting> items_;
};

struct MachineEvent {
  Time when = 0;
  MachineId machine = 0;
  bool operator>(const MachineEvent& o) const {
    return when != o.when ? when > o.when : machine > o.machine;
  }
};

std::optional<Schedule> Dispatch(const Instance& instance, DispatchRule rule,
                                 std::optional<Deadline> deadline) {
  const auto ops = instance.operations();
  const std::size_t n = ops.size();
  const std::size_t jobs = instance.job_count();
  const auto machines = static_cast<std::size_t>(instance.machine_count());

  // Work remaining in a job from each operation onward.
  std::vector<Time> tail;
  if (rule == DispatchRule::kMostWorkRemaining) {
    tail.resize(n);
    for (std::size_t j = 0; j < jobs; ++j) {
      Time sum = 0;
      for (std::size_t i = instance.job_begin(j + 1); i-- > instance.job_begin(j);) {
        sum += ops[i].duration;
        tail[i] = sum;
      }
    }
  }

  std::vector<std::size_t> next(jobs);
  std::vector<Time> job_ready(jobs, 0);
  std::vector<Time> machine_free(machines, 0);
  // Per machine: operations not yet ready at the last decision on the machine
  // (keyed by ready time), and operations ready (keyed by rule).
  std::vector<Heap> pending(machines);
  std::vector<Heap> ready(machines);

  auto rule_key = [&](std::size_t flat, Time since) -> Time {
    switch (rule) {
      case DispatchRule::kShortestProcessingTime:
        return ops[flat].duration;
      case DispatchRule::kLongestProcessingTime:
        return -ops[flat].duration;
      case DispatchRule::kMostWorkRemaining:
        return -tail[flat];
      case DispatchRule::kFirstInFirstOut:
        return since;
    }
    return 0;
  };
  // Earliest time any operation can start on m.
  auto earliest = [&](std::size_t m) -> Time {
    if (!ready[m].empty()) return machine_free[m];
    if (!pending[m].empty()) return std::max(machine_free[m], pending[m].top().key);
    return kNever;
  };

  std::vector<MachineEvent> events;
  auto post = [&](std::size_t m) {
    const Time t = earliest(m);
    if (t == kNever) return;
    events.push_back({t, static_cast<MachineId>(m)});
    std::push_heap(events.begin(), events.end(), std::greater<MachineEvent>());
  };

  for (std::size_t j = 0; j < jobs; ++j) {
    next[j] = instance.job_begin(j);
    if (instance.job_size(j) > 0) {
      pending[static_cast<std::size_t>(ops[next[j]].machine)].push(
          {0, static_cast<std::uint32_t>(j)});
    }
  }
  for (std::size_t m = 0; m < machines; ++m) post(m);

  Schedule schedule(n);
  std::size_t placed = 0;
  while (placed < n) {
    if (deadline && placed % kDeadlineStride == 0 &&
        std::chrono::steady_clock::now() > *deadline) {
      return std::nullopt;
    }
    std::pop_heap(events.begin(), events.end(), std::greater<MachineEvent>());
    const MachineEvent event = events.back();
    events.pop_back();
    const auto m = static_cast<std::size_t>(event.machine);
    const Time now = earliest(m);
    if (now != event.when) continue;  // stale

    while (!pending[m].empty() && pending[m].top().key <= now) {
      const Waiting w = pending[m].pop();
      ready[m].push({rule_key(next[w.job], w.key), w.job});
    }
    const std::uint32_t j = ready[m].pop().job;
    const std::size_t flat = next[j];
    schedule.set_start(flat, now);
    const Time end = now + ops[flat].duration;
    machine_free[m] = end;
    job_ready[j] = end;
    ++placed;
    if (++next[j] < instance.job_begin(j + 1)) {
      const auto to = static_cast<std::size_t>(ops[next[j]].machine);
      pending[to].push({end, j});
      if (to != m) post(to);
    }
    post(m);
  }
  return schedule;
}

}  // namespace

const char* ToString(DispatchRule rule) {
  switch (rule) {
    case DispatchRule::kShortestProcessingTime:
      return "spt";
    case DispatchRule::kLongestProcessingTime:
      return "lpt";
    case DispatchRule::kMostWorkRemaining:
      return "mwr";
    case DispatchRule::kFirstInFirstOut:
      return "fifo";
  }
  return "?";
}

std::optional<DispatchRule> ParseDispatchRule(std::string_view text) {
  for (const DispatchRule rule : kAllDispatchRules) {
    if (text == ToString(rule)) return rule;
  }
  return std::nullopt;
}

Schedule DispatchSchedule(const Instance& instance, DispatchRule rule) {
  return *Dispatch(instance, rule, std::nullopt);
}

std::optional<Schedule> DispatchSchedule(const Instance& instance,
                                         DispatchRule rule, Deadline deadline) {
  return Dispatch(instance, rule, deadline);
}

}  // namespace jsspbench
