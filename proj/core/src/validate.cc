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

#include "jsspbench/validate.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "jsspbench/errors.h"

namespace jsspbench {
namespace {

class Collector {
 public:
  Collector(ValidationReport& report, std::size_t cap)
      : report_(report), cap_(cap) {}

  bool wants_detail() const { return report_.violations.size() < cap_; }

  void Add(Violation v) {
    ++report_.total_violations;
    if (wants_detail()) report_.violations.push_back(std::move(v));
  }

  // Counts violations without detail.
  void AddUncounted(std::size_t n) { report_.total_violations += n; }

 private:
  ValidationReport& report_;
  std::size_t cap_;
};

std::string Describe(OperationRef ref) {
  return "job " + std::to_string(ref.job) + " op " + std::to_string(ref.index);
}

}  // namespace

const char* ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFeasible:
      return "feasible";
    case Verdict::kInfeasible:
      return "infeasible";
    case Verdict::kMalformed:
      return "malformed";
  }
  return "?";
}

const char* ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOverlap:
      return "overlap";
    case ViolationKind::kPrecedence:
      return "precedence";
    case ViolationKind::kMissing:
      return "missing";
    case ViolationKind::kRange:
      return "range";
  }
  return "?";
}

std::size_t ValidationReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [kind](const Violation& v) { return v.kind == kind; }));
}

ValidationReport ValidateInstance(const Instance& instance,
                                  const ValidateOptions& options) {
  ValidationReport report;
  Collector out(report, options.max_reported);
  const MachineId machines = instance.machine_count();
  if (machines < 1) {
    out.Add({ViolationKind::kRange, {}, -1, std::nullopt,
             "instance has no machines"});
  }
  if (instance.job_count() == 0) {
    out.Add({ViolationKind::kRange, {}, -1, std::nullopt,
             "instance has no jobs"});
  }
  if (instance.known_optimum()) {
    if (*instance.known_optimum() < 1) {
      out.Add({ViolationKind::kRange, {}, -1, std::nullopt,
               "known optimum must be positive"});
    }
    if (instance.kind() == InstanceKind::kRectangular) {
      out.Add({ViolationKind::kRange, {}, -1, std::nullopt,
               "rectangular instances carry no known optimum"});
    }
  }

  const bool rectangular = instance.kind() == InstanceKind::kRectangular;
  std::vector<std::size_t> last_seen(
      static_cast<std::size_t>(std::max<MachineId>(machines, 0)),
      static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    const auto job = instance.job(j);
    if (job.empty()) {
      out.Add({ViolationKind::kRange, {j, 0}, -1, std::nullopt,
               "job " + std::to_string(j) + " has no operations"});
    }
    if (rectangular && machines >= 1 &&
        job.size() != static_cast<std::size_t>(machines)) {
      out.Add({ViolationKind::kRange, {j, 0}, -1, std::nullopt,
               "job " + std::to_string(j) + " has " +
                   std::to_string(job.size()) + " operations, expected " +
                   std::to_string(machines)});
    }
    for (std::size_t k = 0; k < job.size(); ++k) {
      const Operation& op = job[k];
      if (op.machine < 0 || op.machine >= machines) {
        out.Add({ViolationKind::kRange, {j, k}, op.machine, std::nullopt,
                 Describe({j, k}) + ": machine " + std::to_string(op.machine) +
                     " out of range"});
        continue;
      }
      if (op.duration < 1) {
        out.Add({ViolationKind::kRange, {j, k}, op.machine, std::nullopt,
                 Describe({j, k}) + ": non-positive duration " +
                     std::to_string(op.duration)});
      }
      std::size_t& seen = last_seen[static_cast<std::size_t>(op.machine)];
      if (rectangular && seen == j) {
        out.Add({ViolationKind::kRange, {j, k}, op.machine, std::nullopt,
                 Describe({j, k}) + ": machine " + std::to_string(op.machine) +
                     " visited twice"});
      }
      seen = j;
    }
  }
  report.verdict =
      report.total_violations == 0 ? Verdict::kFeasible : Verdict::kMalformed;
  return report;
}

ValidationReport ValidateSchedule(const Instance& instance,
                                  const Schedule& schedule,
                                  const ValidateOptions& options) {
  ValidationReport report;
  Collector out(report, options.max_reported);
  const auto ops = instance.operations();
  const std::size_t n = ops.size();
  const MachineId machines = instance.machine_count();

  // Completeness and ranges.
  if (schedule.size() > n) {
    out.Add({ViolationKind::kRange, {}, -1, std::nullopt,
             "schedule has " + std::to_string(schedule.size()) +
                 " entries for " + std::to_string(n) + " operations"});
  }
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    const std::size_t begin = instance.job_begin(j);
    for (std::size_t k = 0; k < instance.job_size(j); ++k) {
      const std::size_t i = begin + k;
      if (!schedule.assigned(i)) {
        out.Add({ViolationKind::kMissing, {j, k}, -1, std::nullopt,
                 Describe({j, k}) + " has no start time"});
      } else if (schedule.start(i) < 0) {
        out.Add({ViolationKind::kRange, {j, k}, -1, schedule.start(i),
                 Describe({j, k}) + " starts at negative time " +
                     std::to_string(schedule.start(i))});
      }
      if (ops[i].machine < 0 || ops[i].machine >= machines ||
          ops[i].duration < 1) {
        out.Add({ViolationKind::kRange, {j, k}, ops[i].machine, std::nullopt,
                 Describe({j, k}) + " has an invalid machine or duration"});
      }
    }
  }
  if (report.total_violations > 0) {
    report.verdict = Verdict::kMalformed;
    return report;
  }

  // Precedence within jobs.
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    const std::size_t begin = instance.job_begin(j);
    for (std::size_t k = 1; k < instance.job_size(j); ++k) {
      const Time ready = schedule.start(begin + k - 1) + ops[begin + k - 1].duration;
      const Time start = schedule.start(begin + k);
      if (start < ready) {
        out.Add({ViolationKind::kPrecedence, {j, k}, -1, start,
                 Describe({j, k}) + " starts at " + std::to_string(start) +
                     " before its predecessor ends at " +
                     std::to_string(ready)});
      }
    }
  }

  // Machine exclusivity: bucket by machine, sort by start, sweep with a
  // min-heap of end times of the operations still running.
  std::vector<std::size_t> bucket_begin(static_cast<std::size_t>(machines) + 1, 0);
  for (const Operation& op : ops) ++bucket_begin[static_cast<std::size_t>(op.machine) + 1];
  std::partial_sum(bucket_begin.begin(), bucket_begin.end(), bucket_begin.begin());
  std::vector<std::size_t> by_machine(n);
  {
    std::vector<std::size_t> fill(bucket_begin.begin(), bucket_begin.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      by_machine[fill[static_cast<std::size_t>(ops[i].machine)]++] = i;
    }
  }
  using Running = std::pair<Time, std::size_t>;  // (end, flat index)
  std::vector<Running> running;
  const auto later_end = std::greater<Running>();
  for (MachineId m = 0; m < machines; ++m) {
    const auto first = by_machine.begin() + static_cast<std::ptrdiff_t>(bucket_begin[static_cast<std::size_t>(m)]);
    const auto last = by_machine.begin() + static_cast<std::ptrdiff_t>(bucket_begin[static_cast<std::size_t>(m) + 1]);
    std::sort(first, last, [&](std::size_t a, std::size_t b) {
      return std::pair(schedule.start(a), a) < std::pair(schedule.start(b), b);
    });
    running.clear();
    for (auto it = first; it != last; ++it) {
      const std::size_t i = *it;
      const Time start = schedule.start(i);
      while (!running.empty() && running.front().first <= start) {
        std::pop_heap(running.begin(), running.end(), later_end);
        running.pop_back();
      }
      if (!running.empty()) {
        if (out.wants_detail()) {
          const OperationRef here = instance.ref_of(i);
          for (const Running& other : running) {
            out.Add({ViolationKind::kOverlap, here, m, start,
                     Describe(here) + " overlaps " +
                         Describe(instance.ref_of(other.second)) +
                         " on machine " + std::to_string(m) + " at time " +
                         std::to_string(start)});
          }
        } else {
          out.AddUncounted(running.size());
        }
      }
      running.emplace_back(start + ops[i].duration, i);
      std::push_heap(running.begin(), running.end(), later_end);
    }
  }

  if (report.total_violations > 0) {
    report.verdict = Verdict::kInfeasible;
  } else {
    report.verdict = Verdict::kFeasible;
    report.makespan = Makespan(instance, schedule);
  }
  return report;
}

Certification CertifyKnownOptimum(const Instance& instance,
                                  const Schedule& schedule) {
  if (!instance.known_optimum()) {
    throw PreconditionError("instance has no known optimum");
  }
  const Time optimum = *instance.known_optimum();
  const ValidationReport report = ValidateSchedule(instance, schedule);
  if (!report.feasible()) {
    return {false, std::string("schedule is ") + ToString(report.verdict) +
                       " (" + std::to_string(report.total_violations) +
                       " violations)"};
  }
  if (*report.makespan != optimum) {
    const Time gap = *report.makespan - optimum;
    return {false, "makespan gap " + std::to_string(gap)};
  }
  const Time load = MachineLoadBound(instance);
  if (load != optimum) {
    return {false, "machine load bound " + std::to_string(load) +
                       " differs from the known optimum " +
                       std::to_string(optimum)};
  }
  return {true, {}};
}

}  // namespace jsspbench
