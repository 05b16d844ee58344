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

#include "jsspbench/benchmark_tree.h"

#include <algorithm>
#include <system_error>

#include "jsspbench/errors.h"

namespace jsspbench {

namespace fs = std::filesystem;

const char* DirectoryName(BenchmarkKind kind) {
  return kind == BenchmarkKind::kLargeTa ? "large" : "bench";
}

std::size_t BenchmarkTree::instance_count() const {
  std::size_t n = 0;
  for (const SubFolder& s : subfolders) n += s.instances.size();
  return n;
}

BenchmarkTree ScanBenchmarkTree(const fs::path& root, BenchmarkKind kind,
                                const std::optional<std::string>& only) {
  const fs::path dir = root / DirectoryName(kind);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw LayoutError(dir.string() + " is not a directory");
  }
  BenchmarkTree tree;
  tree.root = root;
  tree.kind = kind;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    if (only && name != *only) continue;
    SubFolder sub;
    sub.name = name;
    for (const fs::directory_entry& file : fs::directory_iterator(entry.path())) {
      if (file.is_regular_file() && file.path().extension() == ".data") {
        sub.instances.push_back(file.path());
      }
    }
    std::sort(sub.instances.begin(), sub.instances.end(),
              [](const fs::path& a, const fs::path& b) {
                return a.filename().string() < b.filename().string();
              });
    tree.subfolders.push_back(std::move(sub));
  }
  if (tree.subfolders.empty()) {
    throw LayoutError(only ? dir.string() + " has no sub-folder '" + *only + "'"
                           : dir.string() + " has no sub-folders");
  }
  std::sort(tree.subfolders.begin(), tree.subfolders.end(),
            [](const SubFolder& a, const SubFolder& b) { return a.name < b.name; });
  return tree;
}

}  // namespace jsspbench
