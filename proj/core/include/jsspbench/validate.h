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

#ifndef JSSPBENCH_VALIDATE_H_
#define JSSPBENCH_VALIDATE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jsspbench/instance.h"

namespace jsspbench {

enum class Verdict {
  kFeasible,
  kInfeasible,
  kMalformed,
};

enum class ViolationKind {
  kOverlap,
  kPrecedence,
  kMissing,
  kRange,
};

const char* ToString(Verdict verdict);
const char* ToString(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::kRange;
  // The operation the violation is reported at. For overlaps, the later of
  // the two operations in start order.
  OperationRef where;
  // Machine for overlaps and machine-range errors, -1 otherwise.
  MachineId machine = -1;
  // Time the conflict begins, when meaningful.
  std::optional<Time> time;
  std::string detail;
};

// Verdict is kFeasible exactly when no violation was found. Missing or
// out-of-range data makes the verdict kMalformed; overlaps and precedence
// breaks alone make it kInfeasible.
struct ValidationReport {
  Verdict verdict = Verdict::kFeasible;
  // At most the configured cap; total_violations counts all of them.
  std::vector<Violation> violations;
  std::size_t total_violations = 0;
  std::optional<Time> makespan;

  bool feasible() const { return verdict == Verdict::kFeasible; }
  std::size_t count(ViolationKind kind) const;
};

struct ValidateOptions {
  std::size_t max_reported = 100;
};

// Completeness, per-job precedence and per-machine disjointness. Overlaps
// are counted per pair of operations sharing a machine and intersecting in
// time. O(n log n + reported violations).
ValidationReport ValidateSchedule(const Instance& instance,
                                  const Schedule& schedule,
                                  const ValidateOptions& options = {});

// Structural rules: at least one machine and one job, no empty job, machine
// ids in range, positive durations, and for rectangular instances one
// operation per machine per job.
ValidationReport ValidateInstance(const Instance& instance,
                                  const ValidateOptions& options = {});

struct Certification {
  bool certified = false;
  // Empty when certified.
  std::string reason;
};

// Certified iff the schedule is feasible, its makespan equals the instance's
// known optimum, and so does MachineLoadBound (the load bound proves no
// schedule can do better). Throws PreconditionError without a known optimum.
Certification CertifyKnownOptimum(const Instance& instance,
                                  const Schedule& schedule);

}  // namespace jsspbench

#endif  // JSSPBENCH_VALIDATE_H_
