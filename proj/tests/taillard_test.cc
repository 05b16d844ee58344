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

#include <algorithm>
#include <set>
#include <vector>

#include "jsspbench/errors.h"
#include "jsspbench/formats.h"
#include "jsspbench/taillard.h"
#include "jsspbench/validate.h"

namespace jsspbench {
namespace {

bool IsMachinePermutation(const Instance& inst, std::size_t j) {
  std::vector<MachineId> machines;
  for (const Operation& op : inst.job(j)) machines.push_back(op.machine);
  std::sort(machines.begin(), machines.end());
  for (std::size_t k = 0; k < machines.size(); ++k) {
    if (machines[k] != static_cast<MachineId>(k)) return false;
  }
  return machines.size() == static_cast<std::size_t>(inst.machine_count());
}

TEST(GenerateRectangularTest, TenByTenHasHundredOperations) {
  const Instance inst = GenerateRectangular({10, 10, 1, 99, 1});
  EXPECT_EQ(inst.operation_count(), 100u);
  EXPECT_EQ(inst.job_count(), 10u);
  EXPECT_EQ(inst.kind(), InstanceKind::kRectangular);
  EXPECT_FALSE(inst.known_optimum());
}

TEST(GenerateRectangularTest, OneByOne) {
  const Instance inst = GenerateRectangular({1, 1, 1, 99, 5});
  ASSERT_EQ(inst.operation_count(), 1u);
  EXPECT_EQ(inst.job(0)[0].machine, 0);
}

TEST(GenerateRectangularTest, DeterministicPermutations) {
  const TaillardConfig config{3, 3, 1, 99, 77};
  const Instance a = GenerateRectangular(config);
  const Instance b = GenerateRectangular(config);
  EXPECT_EQ(a, b);
  for (std::size_t j = 0; j < a.job_count(); ++j) EXPECT_TRUE(IsMachinePermutation(a, j));
  TaillardConfig other = config;
  other.seed = 78;
  EXPECT_NE(GenerateRectangular(other), a);
}

TEST(GenerateRectangularTest, RejectsBadConfig) {
  EXPECT_THROW(GenerateRectangular({0, 3, 1, 99, 0}), ConfigError);
  EXPECT_THROW(GenerateRectangular({3, 0, 1, 99, 0}), ConfigError);
  EXPECT_THROW(GenerateRectangular({3, 3, 0, 99, 0}), ConfigError);
  EXPECT_THROW(GenerateRectangular({3, 3, 50, 10, 0}), ConfigError);
}

TEST(GenerateRectangularProperty, RectangularAndInRange) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const TaillardConfig config{static_cast<std::int64_t>(seed % 7 + 1),
                                static_cast<MachineId>(seed % 5 + 1), 3, 17, seed};
    const Instance inst = GenerateRectangular(config);
    EXPECT_TRUE(ValidateInstance(inst).feasible()) << seed;
    EXPECT_EQ(inst.operation_count(),
              static_cast<std::size_t>(config.job_count * config.machine_count));
    for (const Operation& op : inst.operations()) {
      ASSERT_GE(op.duration, 3);
      ASSERT_LE(op.duration, 17);
    }
    for (std::size_t j = 0; j < inst.job_count(); ++j) {
      ASSERT_TRUE(IsMachinePermutation(inst, j));
    }
  }
}

// Pearson chi-square over the 99 duration values with >= 10^5 draws.
// Critical value for 98 degrees of freedom at p = 0.01 is 133.476.
TEST(GenerateRectangularProperty, DurationsUniformChiSquare) {
  const Instance inst = GenerateRectangular({400, 300, 1, 99, 2024});
  std::vector<double> counts(99, 0);
  for (const Operation& op : inst.operations()) counts[static_cast<std::size_t>(op.duration - 1)] += 1;
  const double expected = static_cast<double>(inst.operation_count()) / 99.0;
  double chi2 = 0;
  for (const double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_GE(inst.operation_count(), 100000u);
  EXPECT_LT(chi2, 133.476);
}

// Machine positions within jobs are uniform too: the machine at position 0
// over many jobs, 10 bins, critical value 21.666 (9 dof, p = 0.01).
TEST(GenerateRectangularProperty, FirstMachineUniformChiSquare) {
  const Instance inst = GenerateRectangular({20000, 10, 1, 99, 99});
  std::vector<double> counts(10, 0);
  for (std::size_t j = 0; j < inst.job_count(); ++j) {
    counts[static_cast<std::size_t>(inst.job(j)[0].machine)] += 1;
  }
  double chi2 = 0;
  for (const double c : counts) chi2 += (c - 2000.0) * (c - 2000.0) / 2000.0;
  EXPECT_LT(chi2, 21.666);
}

TEST(LargeTaSuiteTest, PlanCoversTableOne) {
  const auto plan = PlanLargeTaSuite(10, 0);
  ASSERT_EQ(plan.size(), 90u);
  std::set<std::pair<std::int64_t, std::int64_t>> groups;
  std::set<std::string> names;
  std::size_t million = 0;
  for (const LargeTaEntry& e : plan) {
    groups.insert({e.config.machine_count, e.config.job_count});
    names.insert(e.name);
    if (e.config.machine_count * e.config.job_count == 1000000) ++million;
  }
  EXPECT_EQ(groups.size(), 9u);
  EXPECT_EQ(names.size(), 90u);
  EXPECT_EQ(million, 10u);
  EXPECT_TRUE(names.count("tai_j10_m10_1.data"));
  EXPECT_TRUE(names.count("tai_j1000_m1000_10.data"));
}

TEST(LargeTaSuiteTest, OnePerGroup) {
  EXPECT_EQ(PlanLargeTaSuite(1, 3).size(), 9u);
  EXPECT_THROW(PlanLargeTaSuite(0, 3), ConfigError);
}

TEST(LargeTaSuiteTest, SeedsIndependentOfGroupCount) {
  // Instance k of a group keeps its seed when more instances are requested.
  const auto small = PlanLargeTaSuite(1, 7);
  const auto big = PlanLargeTaSuite(3, 7);
  for (const LargeTaEntry& e : small) {
    const auto it = std::find_if(big.begin(), big.end(),
                                 [&](const LargeTaEntry& b) { return b.name == e.name; });
    ASSERT_NE(it, big.end());
    EXPECT_EQ(it->config.seed, e.config.seed);
  }
}

TEST(LargeTaSuiteTest, SmallGroupsSerializeIdenticallyOnRerun) {
  // Restrict to groups up to 100x100 to keep the unit test quick; the
  // acceptance suite covers the full grid.
  for (const LargeTaEntry& e : PlanLargeTaSuite(2, 7)) {
    if (e.config.job_count * e.config.machine_count > 10000) continue;
    EXPECT_EQ(SerializeLargeTa(GenerateRectangular(e.config)),
              SerializeLargeTa(GenerateRectangular(e.config)));
  }
}

}  // namespace
}  // namespace jsspbench
