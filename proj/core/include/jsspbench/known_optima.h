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

#ifndef JSSPBENCH_KNOWN_OPTIMA_H_
#define JSSPBENCH_KNOWN_OPTIMA_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jsspbench/instance.h"

namespace jsspbench {

enum class Linking {
  // Successor drawn uniformly among all eligible segments: many short jobs.
  kShortJobs,
  // Successor with the smallest idle gap, ties drawn uniformly: few long jobs.
  kLongJobs,
};

enum class SuccessorGap {
  // suc.start > op.end
  kStrict,
  // suc.start >= op.end
  kNonStrict,
};

const char* ToString(Linking linking);
const char* ToString(SuccessorGap gap);

struct GenerationConfig {
  MachineId machine_count = 1;
  std::int64_t total_ops = 1;
  Time target_makespan = 600000;
  Time min_duration = 1;
  Linking linking = Linking::kShortJobs;
  SuccessorGap successor_gap = SuccessorGap::kStrict;
  std::uint64_t seed = 0;
};

// Throws ConfigError unless total_ops >= machine_count and the busiest
// machine's segments fit: ceil(total_ops / machine_count) * min_duration <=
// target_makespan.
void CheckConfig(const GenerationConfig& config);

struct Segment {
  MachineId machine = 0;
  Time start = 0;
  Time end = 0;

  Time length() const { return end - start; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Zero-idle partition of every machine's [0, makespan) axis. Segments are
// stored grouped by machine, in time order within a machine; machine m owns
// segments [machine_begin(m), machine_begin(m + 1)).
class PlannedTimeline {
 public:
  PlannedTimeline(MachineId machine_count, Time makespan,
                  std::vector<Segment> segments,
                  std::vector<std::size_t> machine_offsets);

  MachineId machine_count() const { return machine_count_; }
  Time makespan() const { return makespan_; }
  std::size_t size() const { return segments_.size(); }
  const Segment& segment(std::size_t id) const { return segments_[id]; }
  std::span<const Segment> segments() const { return segments_; }
  std::size_t machine_begin(MachineId m) const { return machine_offsets_[m]; }
  std::span<const Segment> machine(MachineId m) const {
    return {segments_.data() + machine_offsets_[m],
            machine_offsets_[m + 1] - machine_offsets_[m]};
  }

 private:
  MachineId machine_count_;
  Time makespan_;
  std::vector<Segment> segments_;
  std::vector<std::size_t> machine_offsets_;
};

// An instance built from a timeline, with the schedule it was built from.
struct LinkedSolution {
  Instance instance;
  // Starts every operation at its segment's start; zero idle, makespan equal
  // to the timeline's.
  Schedule certificate;
  // Indexed by timeline segment id; nullopt when absent.
  std::vector<std::optional<std::size_t>> successor;
  std::vector<std::optional<std::size_t>> predecessor;
  // Timeline segment id of each operation, by flat operation index.
  std::vector<std::size_t> segment_of;
};

// Splits each machine's axis into total_ops / machine_count segments, with
// the remainder handed one each to machines chosen uniformly at random.
// Within a machine the cut points are uniform over all compositions with
// every part >= min_duration.
PlannedTimeline PartitionTimeline(const GenerationConfig& config);

LinkedSolution LinkShortJobs(const PlannedTimeline& timeline, SuccessorGap gap,
                             std::uint64_t seed);
LinkedSolution LinkLongJobs(const PlannedTimeline& timeline, SuccessorGap gap,
                            std::uint64_t seed);

// Builds jobs from a successor relation over the timeline's segments.
// `successor` must describe disjoint time-increasing chains. Jobs are emitted
// ordered by (first segment start, machine). Exposed for tests.
LinkedSolution AssembleChains(
    const PlannedTimeline& timeline,
    std::vector<std::optional<std::size_t>> successor);

// PartitionTimeline followed by the configured linker. The instance carries
// known_optimum = target_makespan.
LinkedSolution GenerateKnownOptima(const GenerationConfig& config);

}  // namespace jsspbench

#endif  // JSSPBENCH_KNOWN_OPTIMA_H_
