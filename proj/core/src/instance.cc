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

#include "jsspbench/instance.h"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "jsspbench/errors.h"

namespace jsspbench {

const char* ToString(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kRectangular:
      return "rectangular";
    case InstanceKind::kFreeForm:
      return "free-form";
  }
  return "?";
}

Instance::Instance(InstanceKind kind, MachineId machine_count,
                   std::vector<Operation> operations,
                   std::vector<std::size_t> offsets,
                   std::optional<Time> known_optimum)
    : kind_(kind),
      machine_count_(machine_count),
      operations_(std::move(operations)),
      offsets_(std::move(offsets)),
      known_optimum_(known_optimum) {
  if (machine_count_ < 0) throw Error("negative machine count");
  if (offsets_.empty() || offsets_.front() != 0 ||
      offsets_.back() != operations_.size() ||
      !std::is_sorted(offsets_.begin(), offsets_.end())) {
    throw Error("job offsets do not partition the operation list");
  }
}

OperationRef Instance::ref_of(std::size_t flat) const {
  assert(flat < operations_.size());
  // Last offset <= flat; empty jobs are skipped by upper_bound.
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
  const std::size_t job = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {job, flat - offsets_[job]};
}

Instance Instance::with_known_optimum(std::optional<Time> optimum) const {
  Instance copy = *this;
  copy.known_optimum_ = optimum;
  return copy;
}

InstanceBuilder::InstanceBuilder(InstanceKind kind, MachineId machine_count)
    : kind_(kind), machine_count_(machine_count) {}

void InstanceBuilder::Reserve(std::size_t jobs, std::size_t operations) {
  offsets_.reserve(jobs + 1);
  operations_.reserve(operations);
}

void InstanceBuilder::BeginJob() { offsets_.push_back(operations_.size()); }

void InstanceBuilder::AddOperation(MachineId machine, Time duration) {
  assert(offsets_.size() > 1 && "BeginJob() before AddOperation()");
  operations_.push_back({machine, duration});
  offsets_.back() = operations_.size();
}

void InstanceBuilder::AddJob(std::span<const Operation> operations) {
  BeginJob();
  operations_.insert(operations_.end(), operations.begin(), operations.end());
  offsets_.back() = operations_.size();
}

Instance InstanceBuilder::Build() && {
  return Instance(kind_, machine_count_, std::move(operations_),
                  std::move(offsets_), known_optimum_);
}

Time Makespan(const Instance& instance, const Schedule& schedule) {
  const auto ops = instance.operations();
  Time makespan = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!schedule.assigned(i)) {
      const OperationRef ref = instance.ref_of(i);
      throw IncompleteScheduleError(ref.job, ref.index);
    }
    makespan = std::max(makespan, schedule.start(i) + ops[i].duration);
  }
  return makespan;
}

}  // namespace jsspbench
