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

#ifndef JSSPBENCH_STATS_H_
#define JSSPBENCH_STATS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jsspbench/instance.h"

namespace jsspbench {

// Exact min / max / sum over a sample of integers. The mean is the rational
// sum / count; mean_text() renders it with one decimal.
struct Summary {
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::int64_t sum = 0;
  std::int64_t count = 0;

  double mean() const {
    return count == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(count);
  }
  std::string mean_text() const;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct InstanceStats {
  std::int64_t job_count = 0;
  std::int64_t machine_count = 0;
  std::int64_t total_ops = 0;
  Summary ops_per_job;
  Summary duration;

  friend bool operator==(const InstanceStats&, const InstanceStats&) = default;
};

InstanceStats ComputeInstanceStats(const Instance& instance);

// One "key=value" pair per field separated by spaces, prefixed by
// "instance=<name>". Stable field order.
std::string FormatStatsKeyValue(std::string_view name,
                                const InstanceStats& stats);

// Human-readable multi-line rendering.
std::string FormatStatsText(std::string_view name, const InstanceStats& stats);

}  // namespace jsspbench

#endif  // JSSPBENCH_STATS_H_
