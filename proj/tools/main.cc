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

#include <iostream>

#include "run.h"

int main(int argc, char** argv) {
  const jsspbench::cli::ParsedArgs args =
      jsspbench::cli::ParseCommandLine(argc, argv, std::cout, std::cerr);
  if (args.exit_code) return *args.exit_code;
  return jsspbench::cli::Run(args.config, std::cout, std::cerr);
}
