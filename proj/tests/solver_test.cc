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

#include <gtest/gtest.h>

#include <chrono>

#include "jsspbench/errors.h"
#include "jsspbench/known_optima.h"
#include "jsspbench/random.h"
#include "jsspbench/solver.h"
#include "jsspbench/taillard.h"
#include "jsspbench/validate.h"
#include "test_util.h"

namespace jsspbench {
namespace {

using testing::MakeInstance;

std::vector<Time> Starts(const Schedule& s) {
  const auto v = s.starts();
  return {v.begin(), v.end()};
}

Instance RandomTiny(Rng& rng, std::size_t max_ops) {
  const auto machines = static_cast<MachineId>(rng.UniformInt(1, 3));
  std::vector<testing::JobSpec> jobs;
  std::size_t total = 0;
  const auto target = static_cast<std::size_t>(rng.UniformInt(1, static_cast<std::int64_t>(max_ops)));
  while (total < target) {
    testing::JobSpec job;
    const auto len = rng.UniformInt(1, 3);
    for (int k = 0; k < len && total < target; ++k, ++total) {
      job.emplace_back(static_cast<MachineId>(rng.UniformInt(0, machines - 1)),
                       rng.UniformInt(1, 6));
    }
    jobs.push_back(std::move(job));
  }
  return MakeInstance(machines, jobs);
}

TEST(DispatchRuleTest, Names) {
  for (const DispatchRule r : kAllDispatchRules) {
    EXPECT_EQ(ParseDispatchRule(ToString(r)), r);
  }
  EXPECT_FALSE(ParseDispatchRule("edd"));
}

TEST(DispatchTest, SingleJobIsChain) {
  const Instance inst = MakeInstance(3, {{{2, 4}, {0, 1}, {1, 7}}});
  for (const DispatchRule r : kAllDispatchRules) {
    const Schedule s = DispatchSchedule(inst, r);
    EXPECT_EQ(Makespan(inst, s), JobLengthBound(inst));
    EXPECT_EQ(Makespan(inst, s), 12);
  }
}

TEST(DispatchTest, RuleTieBreaks) {
  // Two jobs ready at 0 on one machine: SPT runs the short one first, LPT
  // the long one, FIFO and ties the lower job index.
  const Instance inst = MakeInstance(1, {{{0, 5}}, {{0, 2}}});
  EXPECT_EQ(Starts(DispatchSchedule(inst, DispatchRule::kShortestProcessingTime)),
            (std::vector<Time>{2, 0}));
  EXPECT_EQ(Starts(DispatchSchedule(inst, DispatchRule::kLongestProcessingTime)),
            (std::vector<Time>{0, 5}));
  EXPECT_EQ(Starts(DispatchSchedule(inst, DispatchRule::kFirstInFirstOut)),
            (std::vector<Time>{0, 5}));
}

TEST(DispatchTest, MostWorkRemaining) {
  const Instance inst = MakeInstance(2, {{{0, 2}}, {{0, 2}, {1, 9}}});
  EXPECT_EQ(Starts(DispatchSchedule(inst, DispatchRule::kMostWorkRemaining)),
            (std::vector<Time>{2, 0, 2}));
}

TEST(DispatchProperty, FeasibleAndAboveBounds) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = GenerateRectangular(
        {.job_count = rng.UniformInt(1, 12),
         .machine_count = static_cast<MachineId>(rng.UniformInt(1, 8)),
         .seed = rng.Next()});
    for (const DispatchRule r : kAllDispatchRules) {
      const Schedule s = DispatchSchedule(inst, r);
      const ValidationReport v = ValidateSchedule(inst, s);
      ASSERT_TRUE(v.feasible());
      EXPECT_GE(*v.makespan, TrivialLowerBound(inst));
    }
  }
}

TEST(DispatchProperty, KnownOptimaNeverBeatsOptimum) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenerationConfig c;
    c.machine_count = 20;
    c.total_ops = 1000;
    c.min_duration = 2;
    c.linking = seed % 2 ? Linking::kLongJobs : Linking::kShortJobs;
    c.seed = seed;
    const Instance inst = GenerateKnownOptima(c).instance;
    for (const DispatchRule r : kAllDispatchRules) {
      const Schedule s = DispatchSchedule(inst, r);
      ASSERT_TRUE(ValidateSchedule(inst, s).feasible());
      EXPECT_GE(Makespan(inst, s), 600000);
    }
  }
}

TEST(DispatchTest, Deterministic) {
  const Instance inst = GenerateRectangular({.job_count = 30, .machine_count = 10, .seed = 9});
  for (const DispatchRule r : kAllDispatchRules) {
    EXPECT_EQ(Starts(DispatchSchedule(inst, r)), Starts(DispatchSchedule(inst, r)));
  }
}

TEST(DispatchTest, Deadline) {
  const Instance inst = GenerateRectangular({.job_count = 100, .machine_count = 100, .seed = 1});
  const auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_FALSE(DispatchSchedule(inst, DispatchRule::kShortestProcessingTime, past));
  const auto later = std::chrono::steady_clock::now() + std::chrono::hours(1);
  const auto s = DispatchSchedule(inst, DispatchRule::kShortestProcessingTime, later);
  ASSERT_TRUE(s);
  EXPECT_EQ(Starts(*s),
            Starts(DispatchSchedule(inst, DispatchRule::kShortestProcessingTime)));
}

TEST(BruteForceTest, OneMachine) {
  EXPECT_EQ(BruteForceOptimum(MakeInstance(1, {{{0, 5}}, {{0, 7}}})), 12);
}

TEST(BruteForceTest, TwoByTwo) {
  // Both jobs start together on different machines, then swap; machine 0
  // carries 3 + 3 and sets the optimum.
  const Instance inst = MakeInstance(2, {{{0, 3}, {1, 2}}, {{1, 2}, {0, 3}}});
  EXPECT_EQ(BruteForceOptimum(inst), 6);
  EXPECT_EQ(testing::EnumerateMachineOrders(inst), 6);
}

TEST(BruteForceTest, SizeLimit) {
  std::vector<testing::JobSpec> jobs(11, testing::JobSpec{{0, 1}});
  const Instance inst = MakeInstance(1, jobs);
  EXPECT_THROW(BruteForceOptimum(inst), SizeError);
  EXPECT_EQ(BruteForceOptimum(inst, 11), 11);
}

TEST(BruteForceProperty, AgreesWithEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const Instance inst = RandomTiny(rng, 6);
    ASSERT_EQ(BruteForceOptimum(inst), testing::EnumerateMachineOrders(inst)) << trial;
  }
}

TEST(BruteForceProperty, DispatchNoBetterThanOptimum) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = GenerateRectangular(
        {.job_count = 3, .machine_count = 3, .duration_high = 20, .seed = rng.Next()});
    const Time optimum = BruteForceOptimum(inst);
    EXPECT_GE(optimum, TrivialLowerBound(inst));
    for (const DispatchRule r : kAllDispatchRules) {
      EXPECT_GE(Makespan(inst, DispatchSchedule(inst, r)), optimum);
    }
  }
}

}  // namespace
}  // namespace jsspbench
