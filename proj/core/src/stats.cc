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

#include "jsspbench/stats.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>

namespace jsspbench {
namespace {

class SummaryBuilder {
 public:
  void Add(std::int64_t v) {
    if (s_.count == 0) {
      s_.min = s_.max = v;
    } else {
      s_.min = std::min(s_.min, v);
      s_.max = std::max(s_.max, v);
    }
    s_.sum += v;
    ++s_.count;
  }
  Summary Get() const { return s_; }

 private:
  Summary s_;
};

}  // namespace

std::string Summary::mean_text() const {
  if (count == 0) return "0.0";
  // Round half away from zero on the exact rational sum / count, in tenths.
  // Working on quotient and remainder keeps intermediates within 64 bits.
  const bool negative = sum < 0;
  const std::uint64_t magnitude =
      negative ? 0 - static_cast<std::uint64_t>(sum) : static_cast<std::uint64_t>(sum);
  const auto n = static_cast<std::uint64_t>(count);
  std::uint64_t whole = magnitude / n;
  const std::uint64_t rest = (magnitude % n) * 10;
  std::uint64_t tenths = rest / n;
  if ((rest % n) * 2 >= n) ++tenths;
  if (tenths == 10) {
    ++whole;
    tenths = 0;
  }
  std::string text = (negative && (whole != 0 || tenths != 0)) ? "-" : "";
  text += std::to_string(whole) + "." + std::to_string(tenths);
  return text;
}

InstanceStats ComputeInstanceStats(const Instance& instance) {
  InstanceStats stats;
  stats.job_count = static_cast<std::int64_t>(instance.job_count());
  stats.machine_count = instance.machine_count();
  stats.total_ops = static_cast<std::int64_t>(instance.operation_count());
  SummaryBuilder per_job;
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    per_job.Add(static_cast<std::int64_t>(instance.job_size(j)));
  }
  SummaryBuilder durations;
  for (const Operation& op : instance.operations()) durations.Add(op.duration);
  stats.ops_per_job = per_job.Get();
  stats.duration = durations.Get();
  return stats;
}

std::string FormatStatsKeyValue(std::string_view name,
                                const InstanceStats& stats) {
  std::ostringstream out;
  out << "instance=" << name << " jobs=" << stats.job_count
      << " machines=" << stats.machine_count << " ops=" << stats.total_ops
      << " ops_per_job_min=" << stats.ops_per_job.min
      << " ops_per_job_max=" << stats.ops_per_job.max
      << " ops_per_job_avg=" << stats.ops_per_job.mean_text()
      << " duration_min=" << stats.duration.min
      << " duration_max=" << stats.duration.max
      << " duration_avg=" << stats.duration.mean_text()
      << " duration_sum=" << stats.duration.sum;
  return out.str();
}

std::string FormatStatsText(std::string_view name, const InstanceStats& stats) {
  std::ostringstream out;
  out << name << "\n"
      << "  machines      " << stats.machine_count << "\n"
      << "  jobs          " << stats.job_count << "\n"
      << "  operations    " << stats.total_ops << "\n"
      << "  ops per job   min " << stats.ops_per_job.min << "  max "
      << stats.ops_per_job.max << "  avg " << stats.ops_per_job.mean_text()
      << "\n"
      << "  op length     min " << stats.duration.min << "  max "
      << stats.duration.max << "  avg " << stats.duration.mean_text() << "\n";
  return out.str();
}

}  // namespace jsspbench
