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

#include "run.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "jsspbench/benchmark_tree.h"
#include "jsspbench/errors.h"
#include "jsspbench/random.h"
#include "jsspbench/stats.h"
#include "jsspbench/taillard.h"
#include "jsspbench/validate.h"

namespace jsspbench::cli {
namespace {

namespace fs = std::filesystem;

// Runs fn(i) for i in [0, count) on `workers` threads. Each index is handled
// by exactly one worker. The first exception stops the pool and is rethrown.
void ParallelFor(std::size_t count, int workers,
                 const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(threads, count); ++t) {
      pool.emplace_back(drain);
    }
  }
  if (failure) std::rethrow_exception(failure);
}

fs::path ResultsDir(const RunConfig& config) {
  if (config.results_dir) return *config.results_dir;
  if (const char* env = std::getenv("JSSP_RESULTS_DIR"); env && *env) return env;
  return config.root / "results";
}

std::string OutputSubfolder(const RunConfig& config, std::size_t i) {
  if (config.subfolder) return *config.subfolder;
  return std::to_string(i % static_cast<std::size_t>(config.split) + 1);
}

// One line per instance; `failed` marks lines that make the run exit 1.
struct Outcome {
  std::string line;
  bool failed = false;
};

fs::path WriteReport(const RunConfig& config, const std::vector<Outcome>& outcomes,
                     const std::string& summary) {
  const fs::path dir = ResultsDir(config);
  fs::create_directories(dir);
  const fs::path path =
      dir / (std::string(ToString(config.command)) + "_" +
             ToString(config.benchmark) + "_" +
             config.subfolder.value_or("all") + ".txt");
  std::ofstream report(path, std::ios::trunc);
  for (const Outcome& o : outcomes) report << o.line << "\n";
  report << summary << "\n";
  if (!report) throw Error("failed writing " + path.string());
  return path;
}

struct InstanceFile {
  std::string label;  // <subfolder>/<file name>
  fs::path path;
};

std::vector<InstanceFile> ListInstances(const RunConfig& config) {
  const BenchmarkTree tree =
      ScanBenchmarkTree(config.root, config.benchmark, config.subfolder);
  std::vector<InstanceFile> files;
  for (const SubFolder& sub : tree.subfolders) {
    for (const fs::path& p : sub.instances) {
      files.push_back({sub.name + "/" + p.filename().string(), p});
    }
  }
  return files;
}

int GenerateTa(const RunConfig& config, std::ostream& out) {
  const std::vector<LargeTaEntry> plan = PlanLargeTaSuite(
      config.instances_per_group, config.seed, config.duration_low,
      config.duration_high);
  const fs::path base = config.root / DirectoryName(BenchmarkKind::kLargeTa);
  for (std::size_t i = 0; i < plan.size() && i < static_cast<std::size_t>(config.split); ++i) {
    fs::create_directories(base / OutputSubfolder(config, i));
  }
  ParallelFor(plan.size(), config.workers, [&](std::size_t i) {
    const Instance instance = GenerateRectangular(plan[i].config);
    WriteInstanceFile(base / OutputSubfolder(config, i) / plan[i].name,
                      instance, BenchmarkKind::kLargeTa);
  });
  out << "wrote " << plan.size() << " Large-TA instances under " << base.string()
      << "\n";
  return 0;
}

int GenerateKo(const RunConfig& config, std::ostream& out) {
  struct Item {
    std::string name;
    GenerationConfig gen;
  };
  std::vector<Item> plan;
  for (const Linking linking : config.linkings) {
    for (const KnownOptimaGroup& group : config.ko_groups) {
      for (int index = 1; index <= config.ko_per_group; ++index) {
        GenerationConfig gen;
        gen.machine_count = group.machines;
        gen.total_ops = group.ops;
        gen.target_makespan = config.makespan;
        gen.min_duration = config.min_duration;
        gen.linking = linking;
        gen.successor_gap = config.gap;
        gen.seed = DeriveSeed(
            DeriveSeed(config.seed, static_cast<std::uint64_t>(linking),
                       static_cast<std::uint64_t>(group.machines),
                       static_cast<std::uint64_t>(group.ops)),
            static_cast<std::uint64_t>(index), 0, 0);
        CheckConfig(gen);
        plan.push_back({KnownOptimaFileName({linking, config.makespan,
                                             group.machines, group.ops, index}),
                        gen});
      }
    }
  }
  const fs::path base = config.root / DirectoryName(BenchmarkKind::kKnownOptima);
  for (std::size_t i = 0; i < plan.size() && i < static_cast<std::size_t>(config.split); ++i) {
    fs::create_directories(base / OutputSubfolder(config, i));
  }
  ParallelFor(plan.size(), config.workers, [&](std::size_t i) {
    const LinkedSolution solution = GenerateKnownOptima(plan[i].gen);
    const Certification check =
        CertifyKnownOptimum(solution.instance, solution.certificate);
    if (!check.certified) {
      throw Error(plan[i].name + ": generated certificate rejected: " +
                  check.reason);
    }
    const fs::path path = base / OutputSubfolder(config, i) / plan[i].name;
    WriteInstanceFile(path, solution.instance, BenchmarkKind::kKnownOptima);
    std::ofstream sol(CertificatePath(path), std::ios::binary | std::ios::trunc);
    WriteCertificate(solution, sol);
    sol.flush();
    if (!sol) throw Error("failed writing " + CertificatePath(path).string());
  });
  out << "wrote " << plan.size() << " Known-Optima instances with certificates under "
      << base.string() << "\n";
  return 0;
}

Outcome ValidateOne(const RunConfig& config, const InstanceFile& file) {
  Instance instance;
  try {
    instance = ReadInstanceFile(file.path, config.benchmark, config.parse);
  } catch (const Error& e) {
    return {"instance=" + file.label + " status=malformed detail=\"" +
                std::string(e.what()) + "\"",
            true};
  }
  const ValidationReport shape = ValidateInstance(instance);
  if (!shape.feasible()) {
    return {"instance=" + file.label + " status=malformed detail=\"" +
                shape.violations.front().detail + "\"",
            true};
  }
  const fs::path sol = CertificatePath(file.path);
  if (!fs::exists(sol)) {
    return {"instance=" + file.label + " status=well-formed", false};
  }
  Schedule schedule;
  try {
    std::ifstream in(sol, std::ios::binary);
    schedule = ReadCertificate(in, instance);
  } catch (const ParseError& e) {
    return {"instance=" + file.label + " status=bad-certificate detail=\"" +
                std::string(e.what()) + "\"",
            true};
  }
  const ValidationReport report = ValidateSchedule(instance, schedule);
  if (!report.feasible()) {
    std::string line = "instance=" + file.label + " status=" +
                       ToString(report.verdict) +
                       " violations=" + std::to_string(report.total_violations);
    if (!report.violations.empty()) {
      line += " first=\"" + report.violations.front().detail + "\"";
    }
    return {line, true};
  }
  if (instance.known_optimum()) {
    const Certification c = CertifyKnownOptimum(instance, schedule);
    if (!c.certified) {
      return {"instance=" + file.label + " status=not-certified makespan=" +
                  std::to_string(*report.makespan) + " reason=\"" + c.reason + "\"",
              true};
    }
    return {"instance=" + file.label + " status=certified makespan=" +
                std::to_string(*report.makespan),
            false};
  }
  return {"instance=" + file.label + " status=feasible makespan=" +
              std::to_string(*report.makespan),
          false};
}

Outcome StatsOne(const RunConfig& config, const InstanceFile& file) {
  try {
    const Instance instance =
        ReadInstanceFile(file.path, config.benchmark, config.parse);
    return {FormatStatsKeyValue(file.label, ComputeInstanceStats(instance)), false};
  } catch (const Error& e) {
    return {"instance=" + file.label + " status=malformed detail=\"" +
                std::string(e.what()) + "\"",
            true};
  }
}

Outcome SolveOne(const RunConfig& config, const InstanceFile& file) {
  const auto started = std::chrono::steady_clock::now();
  Instance instance;
  try {
    instance = ReadInstanceFile(file.path, config.benchmark, config.parse);
  } catch (const Error& e) {
    return {"instance=" + file.label + " status=malformed detail=\"" +
                std::string(e.what()) + "\"",
            true};
  }
  if (const ValidationReport shape = ValidateInstance(instance); !shape.feasible()) {
    return {"instance=" + file.label + " status=malformed detail=\"" +
                shape.violations.front().detail + "\"",
            true};
  }
  const Deadline deadline =
      started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(config.timeout_s));
  std::vector<DispatchRule> rules = config.rules;
  if (rules.empty()) rules.assign(std::begin(kAllDispatchRules), std::end(kAllDispatchRules));

  std::optional<Time> best;
  std::optional<DispatchRule> best_rule;
  bool timed_out = false;
  bool infeasible = false;
  for (const DispatchRule rule : rules) {
    const std::optional<Schedule> schedule = DispatchSchedule(instance, rule, deadline);
    if (!schedule) {
      timed_out = true;
      break;
    }
    const ValidationReport report = ValidateSchedule(instance, *schedule);
    if (!report.feasible()) {
      infeasible = true;
      continue;
    }
    if (!best || *report.makespan < *best) {
      best = report.makespan;
      best_rule = rule;
    }
  }
  const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  std::ostringstream line;
  line << "instance=" << file.label
       << " rule=" << (best_rule ? ToString(*best_rule) : "none")
       << " makespan=" << (best ? std::to_string(*best) : "none")
       << " lower_bound=" << TrivialLowerBound(instance);
  if (instance.known_optimum() && best) {
    line << " gap=" << (*best - *instance.known_optimum());
  }
  line << " status=" << (infeasible ? "infeasible" : timed_out ? "timeout" : "ok");
  if (timed_out) {
    line << " note=\"timeout, best makespan = "
         << (best ? std::to_string(*best) : "none") << "\"";
  }
  line << " wall_ms=" << wall_ms;
  return {line.str(), infeasible};
}

int Traverse(const RunConfig& config, std::ostream& out, std::ostream& err,
             Outcome (*one)(const RunConfig&, const InstanceFile&)) {
  const std::vector<InstanceFile> files = ListInstances(config);
  std::vector<Outcome> outcomes(files.size());
  ParallelFor(files.size(), config.workers,
              [&](std::size_t i) { outcomes[i] = one(config, files[i]); });
  std::size_t failures = 0;
  for (const Outcome& o : outcomes) {
    out << o.line << "\n";
    if (o.failed) ++failures;
  }
  const std::string summary = "instances=" + std::to_string(files.size()) +
                              " failures=" + std::to_string(failures);
  out << summary << "\n";
  const fs::path report = WriteReport(config, outcomes, summary);
  out << "report: " << report.string() << "\n";
  if (failures > 0) {
    err << failures << " of " << files.size() << " instances failed\n";
    return 1;
  }
  return 0;
}

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> items;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t at = std::min(text.find(',', begin), text.size());
    if (at > begin) items.emplace_back(text.substr(begin, at - begin));
    begin = at + 1;
  }
  return items;
}

}  // namespace

const char* ToString(Command command) {
  switch (command) {
    case Command::kGenerateTa:
      return "generate-ta";
    case Command::kGenerateKo:
      return "generate-ko";
    case Command::kValidate:
      return "validate";
    case Command::kStats:
      return "stats";
    case Command::kSolve:
      return "solve";
  }
  return "?";
}

std::optional<Command> ParseCommand(std::string_view text) {
  for (const Command c : {Command::kGenerateTa, Command::kGenerateKo,
                          Command::kValidate, Command::kStats, Command::kSolve}) {
    if (text == ToString(c)) return c;
  }
  return std::nullopt;
}

std::vector<KnownOptimaGroup> DefaultKnownOptimaGroups() {
  return {{100, 10000}, {1000, 10000}, {100, 100000}, {1000, 100000}};
}

std::vector<KnownOptimaGroup> ParseKnownOptimaGroups(std::string_view text) {
  std::vector<KnownOptimaGroup> groups;
  for (const std::string& item : SplitList(text)) {
    const std::size_t x = item.find('x');
    std::int64_t machines = 0, ops = 0;
    bool ok = x != std::string::npos;
    if (ok) {
      const auto a = std::from_chars(item.data(), item.data() + x, machines);
      const auto b = std::from_chars(item.data() + x + 1,
                                     item.data() + item.size(), ops);
      ok = a.ec == std::errc() && a.ptr == item.data() + x &&
           b.ec == std::errc() && b.ptr == item.data() + item.size() &&
           machines > 0 && machines <= std::numeric_limits<MachineId>::max() &&
           ops > 0;
    }
    if (!ok) {
      throw ConfigError("bad group '" + item + "', expected <machines>x<ops>");
    }
    groups.push_back({static_cast<MachineId>(machines), ops});
  }
  if (groups.empty()) throw ConfigError("no Known-Optima groups given");
  return groups;
}

void CheckConfig(const RunConfig& config) {
  if (!(config.timeout_s > 0)) throw ConfigError("timeout must be positive");
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  if (config.split < 1) throw ConfigError("split must be >= 1");
  if (config.subfolder && config.subfolder->empty()) {
    throw ConfigError("empty sub-folder name");
  }
  if (config.command == Command::kGenerateKo) {
    if (config.ko_per_group < 1) throw ConfigError("ko-per-group must be >= 1");
    if (config.linkings.empty()) throw ConfigError("no linking selected");
  }
}

int Run(const RunConfig& given, std::ostream& out, std::ostream& err) {
  RunConfig config = given;
  if (config.command == Command::kGenerateTa) config.benchmark = BenchmarkKind::kLargeTa;
  if (config.command == Command::kGenerateKo) {
    config.benchmark = BenchmarkKind::kKnownOptima;
  }
  try {
    CheckConfig(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    switch (config.command) {
      case Command::kGenerateTa:
        return GenerateTa(config, out);
      case Command::kGenerateKo:
        return GenerateKo(config, out);
      case Command::kValidate:
        return Traverse(config, out, err, &ValidateOne);
      case Command::kStats:
        return Traverse(config, out, err, &StatsOne);
      case Command::kSolve:
        return Traverse(config, out, err, &SolveOne);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

ParsedArgs ParseCommandLine(int argc, const char* const* argv,
                            std::ostream& out, std::ostream& err) {
  ParsedArgs parsed;
  RunConfig& config = parsed.config;

  // Legacy positional form: solver, dataset, sub-folder, timeout, workers.
  if (argc == 6 && argv[1][0] != '-') {
    static constexpr DispatchRule kSolverToRule[] = {
        DispatchRule::kMostWorkRemaining, DispatchRule::kShortestProcessingTime,
        DispatchRule::kLongestProcessingTime, DispatchRule::kFirstInFirstOut};
    try {
      const int solver = std::stoi(argv[1]);
      const int dataset = std::stoi(argv[2]);
      if (solver < 0 || solver > 3) throw ConfigError("solver must be 0..3");
      if (dataset == 2) {
        throw ConfigError("dataset 2 (classic instances) is not supported");
      }
      if (dataset < 0 || dataset > 2) throw ConfigError("dataset must be 0..2");
      config.command = Command::kSolve;
      config.rules = {kSolverToRule[solver]};
      config.benchmark =
          dataset == 0 ? BenchmarkKind::kLargeTa : BenchmarkKind::kKnownOptima;
      config.subfolder = argv[3];
      config.timeout_s = std::stod(argv[4]);
      config.workers = std::stoi(argv[5]);
    } catch (const ConfigError& e) {
      err << "error: " << e.what() << "\n";
      parsed.exit_code = 2;
    } catch (const std::exception&) {
      err << "error: positional form is <solver> <dataset> <subfolder> "
             "<timeout> <workers>\n";
      parsed.exit_code = 2;
    }
    return parsed;
  }

  CLI::App app{"Generate, validate, profile and baseline-solve large job-shop "
               "benchmarks.",
               "jsspbench"};
  std::string command, benchmark = "large-ta", rule = "all", linking = "both",
              gap = "strict", groups;
  std::string subfolder;
  app.add_option("--command", command,
                 "generate-ta | generate-ko | validate | stats | solve")
      ->required();
  app.add_option("--benchmark", benchmark, "large-ta | known-optima")
      ->capture_default_str();
  app.add_option("--root", config.root, "Benchmark root directory")
      ->capture_default_str();
  app.add_option("--subfolder", subfolder, "Restrict to one sub-folder");
  app.add_option("--timeout-s", config.timeout_s, "Per-instance solve timeout")
      ->capture_default_str();
  app.add_option("--workers", config.workers, "Worker threads")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Base seed")->capture_default_str();
  app.add_option("--rule", rule, "spt | lpt | mwr | fifo | all")
      ->capture_default_str();
  app.add_option("--split", config.split,
                 "Spread generated files over sub-folders 1..N")
      ->capture_default_str();
  app.add_option("--instances-per-group", config.instances_per_group,
                 "Large-TA instances per size group")
      ->capture_default_str();
  app.add_option("--duration-low", config.duration_low)->capture_default_str();
  app.add_option("--duration-high", config.duration_high)->capture_default_str();
  app.add_option("--ko-groups", groups,
                 "Known-Optima configurations, e.g. 100x10000,1000x10000");
  app.add_option("--ko-per-group", config.ko_per_group,
                 "Known-Optima instances per configuration and linking")
      ->capture_default_str();
  app.add_option("--linking", linking, "short | long | both")
      ->capture_default_str();
  app.add_option("--gap", gap, "strict | non-strict")->capture_default_str();
  app.add_option("--makespan", config.makespan, "Known-Optima target makespan")
      ->capture_default_str();
  app.add_option("--min-duration", config.min_duration,
                 "Known-Optima minimum operation length")
      ->capture_default_str();
  app.add_option("--machine-base", config.parse.machine_base,
                 "Machine id of the first machine in input files (0 or 1)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    parsed.exit_code = app.exit(e, out, err);
    if (*parsed.exit_code != 0) parsed.exit_code = 2;
    return parsed;
  }

  try {
    const auto cmd = ParseCommand(command);
    if (!cmd) throw ConfigError("unknown command '" + command + "'");
    config.command = *cmd;
    const auto kind = ParseBenchmarkKind(benchmark);
    if (!kind) throw ConfigError("unknown benchmark '" + benchmark + "'");
    config.benchmark = *kind;
    if (!subfolder.empty()) config.subfolder = subfolder;
    if (rule != "all") {
      const auto r = ParseDispatchRule(rule);
      if (!r) throw ConfigError("unknown rule '" + rule + "'");
      config.rules = {*r};
    }
    if (linking == "short") {
      config.linkings = {Linking::kShortJobs};
    } else if (linking == "long") {
      config.linkings = {Linking::kLongJobs};
    } else if (linking != "both") {
      throw ConfigError("unknown linking '" + linking + "'");
    }
    if (gap == "non-strict") {
      config.gap = SuccessorGap::kNonStrict;
    } else if (gap != "strict") {
      throw ConfigError("unknown gap '" + gap + "'");
    }
    if (!groups.empty()) config.ko_groups = ParseKnownOptimaGroups(groups);
    CheckConfig(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    parsed.exit_code = 2;
  }
  return parsed;
}

}  // namespace jsspbench::cli
