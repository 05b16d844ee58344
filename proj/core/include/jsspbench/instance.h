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

#ifndef JSSPBENCH_INSTANCE_H_
#define JSSPBENCH_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace jsspbench {

// Durations, start times and makespans. Sums over a million operations of
// length up to 600000 do not fit in 32 bits.
using Time = std::int64_t;
using MachineId = std::int32_t;

struct Operation {
  MachineId machine = 0;
  Time duration = 1;

  friend bool operator==(const Operation&, const Operation&) = default;
};

enum class InstanceKind {
  // Every job visits every machine exactly once.
  kRectangular,
  // Jobs of any length; machines may be skipped or revisited.
  kFreeForm,
};

const char* ToString(InstanceKind kind);

// Positional identity of an operation.
struct OperationRef {
  std::size_t job = 0;
  std::size_t index = 0;

  friend bool operator==(const OperationRef&, const OperationRef&) = default;
};

// A job-shop problem. Operations of all jobs are stored contiguously, job j
// occupying the flat range [job_begin(j), job_begin(j + 1)). Immutable once
// built; safe to share read-only between threads.
//
// The constructor only checks that the layout is coherent. Semantic rules
// (machine ranges, positive durations, rectangularity) are checked by
// ValidateInstance so that foreign files can be reported on rather than
// rejected outright.
class Instance {
 public:
  Instance() = default;
  Instance(InstanceKind kind, MachineId machine_count,
           std::vector<Operation> operations, std::vector<std::size_t> offsets,
           std::optional<Time> known_optimum = std::nullopt);

  InstanceKind kind() const { return kind_; }
  MachineId machine_count() const { return machine_count_; }
  std::size_t job_count() const { return offsets_.size() - 1; }
  std::size_t operation_count() const { return operations_.size(); }
  const std::optional<Time>& known_optimum() const { return known_optimum_; }

  std::span<const Operation> job(std::size_t j) const {
    return {operations_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
  }
  std::size_t job_size(std::size_t j) const {
    return offsets_[j + 1] - offsets_[j];
  }
  std::size_t job_begin(std::size_t j) const { return offsets_[j]; }

  const Operation& operation(OperationRef ref) const {
    return operations_[offsets_[ref.job] + ref.index];
  }
  std::size_t flat_index(OperationRef ref) const {
    return offsets_[ref.job] + ref.index;
  }
  // Inverse of flat_index; O(log jobs).
  OperationRef ref_of(std::size_t flat) const;

  std::span<const Operation> operations() const { return operations_; }
  std::span<const std::size_t> offsets() const { return offsets_; }

  Instance with_known_optimum(std::optional<Time> optimum) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  InstanceKind kind_ = InstanceKind::kFreeForm;
  MachineId machine_count_ = 0;
  std::vector<Operation> operations_;
  std::vector<std::size_t> offsets_{0};
  std::optional<Time> known_optimum_;
};

// Incremental construction of an Instance, one job at a time.
class InstanceBuilder {
 public:
  InstanceBuilder(InstanceKind kind, MachineId machine_count);

  void Reserve(std::size_t jobs, std::size_t operations);
  void BeginJob();
  void AddOperation(MachineId machine, Time duration);
  void AddJob(std::span<const Operation> operations);
  void SetKnownOptimum(Time optimum) { known_optimum_ = optimum; }

  Instance Build() &&;

 private:
  InstanceKind kind_;
  MachineId machine_count_;
  std::vector<Operation> operations_;
  std::vector<std::size_t> offsets_{0};
  std::optional<Time> known_optimum_;
};

// Start times of every operation, indexed by the instance's flat operation
// index. Unassigned entries hold kUnassigned.
class Schedule {
 public:
  static constexpr Time kUnassigned = std::numeric_limits<Time>::min();

  Schedule() = default;
  explicit Schedule(std::size_t operation_count)
      : start_(operation_count, kUnassigned) {}
  explicit Schedule(std::vector<Time> starts) : start_(std::move(starts)) {}

  // Empty schedule sized for `instance`.
  static Schedule For(const Instance& instance) {
    return Schedule(instance.operation_count());
  }

  std::size_t size() const { return start_.size(); }
  bool assigned(std::size_t flat) const {
    return flat < start_.size() && start_[flat] != kUnassigned;
  }
  Time start(std::size_t flat) const { return start_[flat]; }
  void set_start(std::size_t flat, Time t) { start_[flat] = t; }

  Time start(const Instance& instance, OperationRef ref) const {
    return start_[instance.flat_index(ref)];
  }
  void set_start(const Instance& instance, OperationRef ref, Time t) {
    start_[instance.flat_index(ref)] = t;
  }

  std::span<const Time> starts() const { return start_; }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Time> start_;
};

// Latest completion time. Throws IncompleteScheduleError naming the first
// operation without a start time.
Time Makespan(const Instance& instance, const Schedule& schedule);

// Max over machines of the total duration assigned to the machine. A lower
// bound on the optimal makespan.
Time MachineLoadBound(const Instance& instance);

// Per-machine total durations; size machine_count.
std::vector<Time> MachineLoads(const Instance& instance);

// Max over jobs of the job's total duration. A lower bound on the optimal
// makespan.
Time JobLengthBound(const Instance& instance);

// max(MachineLoadBound, JobLengthBound).
Time TrivialLowerBound(const Instance& instance);

}  // namespace jsspbench

#endif  // JSSPBENCH_INSTANCE_H_
