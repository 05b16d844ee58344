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

#ifndef JSSPBENCH_FORMATS_H_
#define JSSPBENCH_FORMATS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "jsspbench/instance.h"
#include "jsspbench/known_optima.h"

namespace jsspbench {

// Both instance formats share the layout
//
//   <jobs> <machines>\n
//   <machine> <duration> <machine> <duration> ...\n      (one line per job)
//
// Large-TA lines carry exactly <machines> pairs. Known-Optima lines carry any
// number of pairs followed by the sentinel pair "-1 -1". Writers emit single
// spaces, "\n" line ends and no trailing whitespace; readers accept any run
// of spaces/tabs between tokens, "\r\n" line ends, and trailing blank lines.

struct ParseOptions {
  // Machine id of the first machine in the file. Files written by this
  // library are 0-based; set to 1 for foreign 1-based files.
  int machine_base = 0;
};

// Throws ParseError (with the 1-based line number) on a wrong pair count,
// non-integer token, machine out of range, non-positive duration, or a
// machine repeated within a job.
Instance ParseLargeTa(std::istream& in, const ParseOptions& options = {});

// Throws ParseError on a missing sentinel, tokens after the sentinel, a job
// count that disagrees with the header, or values out of range.
// `known_optimum` is attached to the returned instance.
Instance ParseKnownOptima(std::istream& in, const ParseOptions& options = {},
                          std::optional<Time> known_optimum = std::nullopt);

// Throws KindError for a free-form instance.
void SerializeLargeTa(const Instance& instance, std::ostream& out);
void SerializeKnownOptima(const Instance& instance, std::ostream& out);

std::string SerializeLargeTa(const Instance& instance);
std::string SerializeKnownOptima(const Instance& instance);

// --- File naming -------------------------------------------------------------

struct LargeTaName {
  std::int64_t jobs = 0;
  std::int64_t machines = 0;
  int index = 0;
};

struct KnownOptimaName {
  Linking linking = Linking::kShortJobs;
  Time makespan = 0;
  std::int64_t machines = 0;
  std::int64_t ops = 0;
  int index = 0;
};

// tai_j<jobs>_m<machines>_<index>.data
std::string LargeTaFileName(const LargeTaName& name);
// <long|short>-js-<makespan>-<machines>-<ops>-<index>.data
std::string KnownOptimaFileName(const KnownOptimaName& name);

std::optional<LargeTaName> ParseLargeTaFileName(std::string_view file_name);
std::optional<KnownOptimaName> ParseKnownOptimaFileName(
    std::string_view file_name);

// --- Certificates ------------------------------------------------------------

// One line per job listing the start time of each operation in order.
void WriteCertificate(const Instance& instance, const Schedule& schedule,
                      std::ostream& out);
void WriteCertificate(const LinkedSolution& solution, std::ostream& out);

// Throws ParseError when the line or value count disagrees with `instance`.
Schedule ReadCertificate(std::istream& in, const Instance& instance);

// <dir>/<stem>.sol for an instance file <dir>/<stem>.data.
std::filesystem::path CertificatePath(const std::filesystem::path& instance);

// --- Files -------------------------------------------------------------------

enum class BenchmarkKind {
  kLargeTa,
  kKnownOptima,
};

const char* ToString(BenchmarkKind kind);
// "large-ta" / "known-optima".
std::optional<BenchmarkKind> ParseBenchmarkKind(std::string_view text);

// Parses `path` in the format of `kind`. Known-Optima files pick up their
// known optimum from a conforming file name. Errors name the file.
Instance ReadInstanceFile(const std::filesystem::path& path,
                          BenchmarkKind kind, const ParseOptions& options = {});

void WriteInstanceFile(const std::filesystem::path& path,
                       const Instance& instance, BenchmarkKind kind);

}  // namespace jsspbench

#endif  // JSSPBENCH_FORMATS_H_
