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

#ifndef JSSPBENCH_BENCHMARK_TREE_H_
#define JSSPBENCH_BENCHMARK_TREE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jsspbench/formats.h"

namespace jsspbench {

// Benchmarks live under
//
//   <root>/large/<subfolder>/*.data     Large-TA
//   <root>/bench/<subfolder>/*.data     Known-Optima
//   <root>/results/                     reports
//
// Sub-folders exist to split a benchmark for parallel runs; any name works.

// "large" or "bench".
const char* DirectoryName(BenchmarkKind kind);

struct SubFolder {
  std::string name;
  // Sorted lexicographically by file name.
  std::vector<std::filesystem::path> instances;
};

struct BenchmarkTree {
  std::filesystem::path root;
  BenchmarkKind kind = BenchmarkKind::kLargeTa;
  // Sorted lexicographically by name.
  std::vector<SubFolder> subfolders;

  std::size_t instance_count() const;
};

// Lists sub-folders of <root>/<DirectoryName(kind)> and their *.data files.
// With `only` set, the result holds just that sub-folder. Throws LayoutError
// when the benchmark directory is missing, holds no sub-folder, or lacks the
// requested one.
BenchmarkTree ScanBenchmarkTree(const std::filesystem::path& root,
                                BenchmarkKind kind,
                                const std::optional<std::string>& only = {});

}  // namespace jsspbench

#endif  // JSSPBENCH_BENCHMARK_TREE_H_
