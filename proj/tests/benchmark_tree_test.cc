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

#include <set>

#include "jsspbench/benchmark_tree.h"
#include "jsspbench/errors.h"
#include "temp_dir.h"

namespace jsspbench {
namespace {

using testing::TempDir;
using testing::WriteFile;

TEST(BenchmarkTreeTest, DirectoryNames) {
  EXPECT_STREQ(DirectoryName(BenchmarkKind::kLargeTa), "large");
  EXPECT_STREQ(DirectoryName(BenchmarkKind::kKnownOptima), "bench");
}

TEST(BenchmarkTreeTest, OneSubfolderNineFiles) {
  TempDir dir;
  for (int i = 9; i >= 1; --i) {
    WriteFile(dir.path() / "large" / "1" / ("tai_j10_m10_" + std::to_string(i) + ".data"),
              "1 1\n0 1\n");
  }
  WriteFile(dir.path() / "large" / "1" / "notes.txt", "ignored");
  const BenchmarkTree tree = ScanBenchmarkTree(dir.path(), BenchmarkKind::kLargeTa);
  ASSERT_EQ(tree.subfolders.size(), 1u);
  EXPECT_EQ(tree.subfolders[0].name, "1");
  ASSERT_EQ(tree.subfolders[0].instances.size(), 9u);
  EXPECT_EQ(tree.subfolders[0].instances.front().filename(), "tai_j10_m10_1.data");
  EXPECT_EQ(tree.instance_count(), 9u);
}

TEST(BenchmarkTreeTest, SubfoldersPartitionTheInstances) {
  TempDir dir;
  const std::set<std::string> all = {"a.data", "b.data", "c.data", "d.data", "e.data"};
  int i = 0;
  for (const std::string& name : all) {
    WriteFile(dir.path() / "bench" / (i++ % 2 ? "2" : "1") / name, "");
  }
  const BenchmarkTree both = ScanBenchmarkTree(dir.path(), BenchmarkKind::kKnownOptima);
  ASSERT_EQ(both.subfolders.size(), 2u);
  const BenchmarkTree one = ScanBenchmarkTree(dir.path(), BenchmarkKind::kKnownOptima, "1");
  const BenchmarkTree two = ScanBenchmarkTree(dir.path(), BenchmarkKind::kKnownOptima, "2");
  std::set<std::string> seen;
  for (const BenchmarkTree* t : {&one, &two}) {
    ASSERT_EQ(t->subfolders.size(), 1u);
    for (const auto& p : t->subfolders[0].instances) {
      EXPECT_TRUE(seen.insert(p.filename().string()).second) << "not disjoint";
    }
  }
  EXPECT_EQ(seen, all);
  EXPECT_EQ(both.instance_count(), all.size());
}

TEST(BenchmarkTreeTest, LayoutErrors) {
  TempDir dir;
  EXPECT_THROW(ScanBenchmarkTree(dir.path(), BenchmarkKind::kLargeTa), LayoutError);
  std::filesystem::create_directories(dir.path() / "large");
  EXPECT_THROW(ScanBenchmarkTree(dir.path(), BenchmarkKind::kLargeTa), LayoutError);
  std::filesystem::create_directories(dir.path() / "large" / "1");
  EXPECT_NO_THROW(ScanBenchmarkTree(dir.path(), BenchmarkKind::kLargeTa));
  EXPECT_THROW(ScanBenchmarkTree(dir.path(), BenchmarkKind::kLargeTa, "7"), LayoutError);
}

}  // namespace
}  // namespace jsspbench
