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

#include "jsspbench/known_optima.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "jsspbench/errors.h"
#include "jsspbench/random.h"

namespace jsspbench {
namespace {

// Independent streams for the partition and linking phases of one instance.
constexpr std::uint64_t kPartitionStream = 1;
constexpr std::uint64_t kLinkingStream = 2;

// Fenwick tree of 0/1 availability flags.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {
    for (std::size_t i = 1; i <= n; ++i) {
      tree_[i] += 1;
      const std::size_t parent = i + (i & (~i + 1));
      if (parent <= n) tree_[parent] += tree_[i];
    }
  }

  void Clear(std::size_t i) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) --tree_[i];
  }

  // Sum over [0, n).
  std::int64_t Prefix(std::size_t n) const {
    std::int64_t sum = 0;
    for (; n > 0; n -= n & (~n + 1)) sum += tree_[n];
    return sum;
  }

  // Sum over [lo, hi).
  std::int64_t Range(std::size_t lo, std::size_t hi) const {
    return hi <= lo ? 0 : Prefix(hi) - Prefix(lo);
  }

 private:
  std::vector<std::int64_t> tree_;
};

// k distinct values drawn uniformly from [0, n), sorted (Floyd's algorithm).
std::vector<std::int64_t> SampleDistinct(Rng& rng, std::int64_t n,
                                         std::int64_t k) {
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(k) * 2);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::int64_t j = n - k; j < n; ++j) {
    const auto t =
        static_cast<std::int64_t>(rng.Below(static_cast<std::uint64_t>(j + 1)));
    const std::int64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Candidate index for the linkers. Segments are ranked by (start, machine);
// "rank" below always refers to that global order.
class SuccessorIndex {
 public:
  explicit SuccessorIndex(const PlannedTimeline& timeline)
      : timeline_(timeline),
        available_(timeline.size()),
        rank_of_(timeline.size()) {
    const std::size_t n = timeline.size();
    by_rank_.resize(n);
    std::iota(by_rank_.begin(), by_rank_.end(), std::size_t{0});
    std::sort(by_rank_.begin(), by_rank_.end(),
              [&](std::size_t a, std::size_t b) {
                const Segment& x = timeline.segment(a);
                const Segment& y = timeline.segment(b);
                return std::pair(x.start, x.machine) <
                       std::pair(y.start, y.machine);
              });
    start_by_rank_.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
      rank_of_[by_rank_[r]] = r;
      start_by_rank_[r] = timeline.segment(by_rank_[r]).start;
    }
    per_machine_.reserve(static_cast<std::size_t>(timeline.machine_count()));
    for (MachineId m = 0; m < timeline.machine_count(); ++m) {
      per_machine_.emplace_back(timeline.machine(m).size());
    }
  }

  // First rank whose start is eligible after a segment ending at `end`.
  std::size_t FirstEligibleRank(Time end, SuccessorGap gap) const {
    const auto it = gap == SuccessorGap::kStrict
                        ? std::upper_bound(start_by_rank_.begin(),
                                           start_by_rank_.end(), end)
                        : std::lower_bound(start_by_rank_.begin(),
                                           start_by_rank_.end(), end);
    return static_cast<std::size_t>(it - start_by_rank_.begin());
  }

  // One past the last rank starting at `start`.
  std::size_t EndOfStart(Time start) const {
    return static_cast<std::size_t>(
        std::upper_bound(start_by_rank_.begin(), start_by_rank_.end(), start) -
        start_by_rank_.begin());
  }

  Time start_at(std::size_t rank) const { return start_by_rank_[rank]; }
  std::size_t segment_at(std::size_t rank) const { return by_rank_[rank]; }

  // Available segments with rank in [lo, hi) not on `machine`.
  std::int64_t CountEligible(std::size_t lo, std::size_t hi,
                             MachineId machine) const {
    if (hi <= lo) return 0;
    return available_.Range(lo, hi) - MachineRange(machine, lo, hi);
  }

  // Rank of the k-th (0-based) eligible segment at or after `lo`. Requires
  // CountEligible(lo, size, machine) > k.
  std::size_t Select(std::size_t lo, std::int64_t k, MachineId machine) const {
    std::size_t a = lo;
    std::size_t b = by_rank_.size() - 1;
    while (a < b) {
      const std::size_t mid = a + (b - a) / 2;
      if (CountEligible(lo, mid + 1, machine) >= k + 1) {
        b = mid;
      } else {
        a = mid + 1;
      }
    }
    return a;
  }

  void MarkLinked(std::size_t segment) {
    available_.Clear(rank_of_[segment]);
    const MachineId m = timeline_.segment(segment).machine;
    per_machine_[static_cast<std::size_t>(m)].Clear(
        segment - timeline_.machine_begin(m));
  }

  std::size_t size() const { return by_rank_.size(); }

 private:
  // Available segments of `machine` with rank in [lo, hi). Within a machine
  // segments are in time order, hence also in rank order.
  std::int64_t MachineRange(MachineId machine, std::size_t lo,
                            std::size_t hi) const {
    const std::size_t begin = timeline_.machine_begin(machine);
    const std::size_t count = timeline_.machine(machine).size();
    auto rank_lt = [&](std::size_t limit) {
      std::size_t a = 0, b = count;
      while (a < b) {
        const std::size_t mid = (a + b) / 2;
        if (rank_of_[begin + mid] < limit) {
          a = mid + 1;
        } else {
          b = mid;
        }
      }
      return a;
    };
    return per_machine_[static_cast<std::size_t>(machine)].Range(rank_lt(lo),
                                                                 rank_lt(hi));
  }

  const PlannedTimeline& timeline_;
  Fenwick available_;
  std::vector<Fenwick> per_machine_;
  std::vector<std::size_t> by_rank_;
  std::vector<std::size_t> rank_of_;
  std::vector<Time> start_by_rank_;
};

LinkedSolution Link(const PlannedTimeline& timeline, SuccessorGap gap,
                    std::uint64_t seed, Linking linking) {
  const std::size_t n = timeline.size();
  Rng rng(seed);
  std::vector<std::size_t> visit(n);
  std::iota(visit.begin(), visit.end(), std::size_t{0});
  rng.Shuffle(std::span<std::size_t>(visit));

  SuccessorIndex index(timeline);
  std::vector<std::optional<std::size_t>> successor(n);
  for (const std::size_t op : visit) {
    const Segment& seg = timeline.segment(op);
    const std::size_t lo = index.FirstEligibleRank(seg.end, gap);
    const std::int64_t eligible = index.CountEligible(lo, n, seg.machine);
    if (eligible == 0) continue;

    std::size_t rank;
    if (linking == Linking::kShortJobs) {
      rank = index.Select(
          lo, static_cast<std::int64_t>(rng.Below(static_cast<std::uint64_t>(eligible))),
          seg.machine);
    } else {
      const std::size_t first = index.Select(lo, 0, seg.machine);
      const std::size_t last = index.EndOfStart(index.start_at(first));
      const std::int64_t ties = index.CountEligible(first, last, seg.machine);
      rank = index.Select(
          first, static_cast<std::int64_t>(rng.Below(static_cast<std::uint64_t>(ties))),
          seg.machine);
    }
    const std::size_t suc = index.segment_at(rank);
    successor[op] = suc;
    index.MarkLinked(suc);
  }
  return AssembleChains(timeline, std::move(successor));
}

}  // namespace

const char* ToString(Linking linking) {
  return linking == Linking::kShortJobs ? "short" : "long";
}

const char* ToString(SuccessorGap gap) {
  return gap == SuccessorGap::kStrict ? "strict" : "non-strict";
}

void CheckConfig(const GenerationConfig& config) {
  if (config.machine_count < 1) {
    throw ConfigError("machine_count must be positive");
  }
  if (config.total_ops < config.machine_count) {
    throw ConfigError("total_ops must be >= machine_count");
  }
  if (config.min_duration < 1) {
    throw ConfigError("min_duration must be positive");
  }
  if (config.target_makespan < 1) {
    throw ConfigError("target_makespan must be positive");
  }
  const std::int64_t busiest =
      (config.total_ops + config.machine_count - 1) / config.machine_count;
  if (busiest > config.target_makespan / config.min_duration) {
    throw ConfigError("cannot fit " + std::to_string(busiest) +
                      " segments of length >= " +
                      std::to_string(config.min_duration) + " into makespan " +
                      std::to_string(config.target_makespan));
  }
}

PlannedTimeline::PlannedTimeline(MachineId machine_count, Time makespan,
                                 std::vector<Segment> segments,
                                 std::vector<std::size_t> machine_offsets)
    : machine_count_(machine_count),
      makespan_(makespan),
      segments_(std::move(segments)),
      machine_offsets_(std::move(machine_offsets)) {
  assert(machine_offsets_.size() == static_cast<std::size_t>(machine_count) + 1);
  assert(machine_offsets_.back() == segments_.size());
}

PlannedTimeline PartitionTimeline(const GenerationConfig& config) {
  CheckConfig(config);
  const auto machines = static_cast<std::size_t>(config.machine_count);
  const Time makespan = config.target_makespan;
  const Time min_len = config.min_duration;
  Rng rng(config.seed);

  std::vector<std::int64_t> count(machines, config.total_ops / config.machine_count);
  std::vector<std::size_t> order(machines);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.Shuffle(std::span<std::size_t>(order));
  const auto extra = static_cast<std::size_t>(config.total_ops % config.machine_count);
  for (std::size_t i = 0; i < extra; ++i) ++count[order[i]];

  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(config.total_ops));
  std::vector<std::size_t> offsets(machines + 1, 0);
  for (std::size_t m = 0; m < machines; ++m) {
    offsets[m] = segments.size();
    const std::int64_t k = count[m];
    // Stars and bars: k parts of length min_len + x_i with sum x_i = slack.
    // k - 1 distinct draws from [0, slack + k - 1), shifted down by their
    // rank, are a uniform non-decreasing sequence in [0, slack].
    const Time slack = makespan - k * min_len;
    const std::vector<std::int64_t> draws = SampleDistinct(rng, slack + k - 1, k - 1);
    Time prev = 0;
    for (std::int64_t i = 0; i < k; ++i) {
      const Time cut = i + 1 < k
                           ? draws[static_cast<std::size_t>(i)] - i + (i + 1) * min_len
                           : makespan;
      segments.push_back({static_cast<MachineId>(m), prev, cut});
      prev = cut;
    }
  }
  offsets[machines] = segments.size();
  return PlannedTimeline(config.machine_count, makespan, std::move(segments),
                         std::move(offsets));
}

LinkedSolution AssembleChains(
    const PlannedTimeline& timeline,
    std::vector<std::optional<std::size_t>> successor) {
  const std::size_t n = timeline.size();
  std::vector<std::optional<std::size_t>> predecessor(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (successor[s]) {
      assert(!predecessor[*successor[s]]);
      predecessor[*successor[s]] = s;
    }
  }
  std::vector<std::size_t> heads;
  for (std::size_t s = 0; s < n; ++s) {
    if (!predecessor[s]) heads.push_back(s);
  }
  std::sort(heads.begin(), heads.end(), [&](std::size_t a, std::size_t b) {
    const Segment& x = timeline.segment(a);
    const Segment& y = timeline.segment(b);
    return std::pair(x.start, x.machine) < std::pair(y.start, y.machine);
  });

  InstanceBuilder builder(InstanceKind::kFreeForm, timeline.machine_count());
  builder.Reserve(heads.size(), n);
  std::vector<Time> starts;
  starts.reserve(n);
  std::vector<std::size_t> segment_of;
  segment_of.reserve(n);
  for (const std::size_t head : heads) {
    builder.BeginJob();
    for (std::optional<std::size_t> s = head; s; s = successor[*s]) {
      const Segment& seg = timeline.segment(*s);
      assert(!successor[*s] || timeline.segment(*successor[*s]).start >= seg.end);
      builder.AddOperation(seg.machine, seg.length());
      starts.push_back(seg.start);
      segment_of.push_back(*s);
    }
  }
  assert(starts.size() == n && "successor relation must be acyclic");
  builder.SetKnownOptimum(timeline.makespan());

  LinkedSolution solution;
  solution.instance = std::move(builder).Build();
  solution.certificate = Schedule(std::move(starts));
  solution.successor = std::move(successor);
  solution.predecessor = std::move(predecessor);
  solution.segment_of = std::move(segment_of);
  return solution;
}

LinkedSolution LinkShortJobs(const PlannedTimeline& timeline, SuccessorGap gap,
                             std::uint64_t seed) {
  return Link(timeline, gap, seed, Linking::kShortJobs);
}

LinkedSolution LinkLongJobs(const PlannedTimeline& timeline, SuccessorGap gap,
                            std::uint64_t seed) {
  return Link(timeline, gap, seed, Linking::kLongJobs);
}

LinkedSolution GenerateKnownOptima(const GenerationConfig& config) {
  GenerationConfig partition_config = config;
  partition_config.seed = DeriveSeed(config.seed, kPartitionStream, 0, 0);
  const PlannedTimeline timeline = PartitionTimeline(partition_config);
  const std::uint64_t link_seed = DeriveSeed(config.seed, kLinkingStream, 0, 0);
  return config.linking == Linking::kShortJobs
             ? LinkShortJobs(timeline, config.successor_gap, link_seed)
             : LinkLongJobs(timeline, config.successor_gap, link_seed);
}

}  // namespace jsspbench
