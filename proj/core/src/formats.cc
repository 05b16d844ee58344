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

#include "jsspbench/formats.h"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <streambuf>
#include <vector>

#include "jsspbench/errors.h"

namespace jsspbench {
namespace {

constexpr std::size_t kMaxTokenLength = 32;

// Streaming tokenizer over integers and line breaks. Reads the underlying
// stream buffer in blocks; never materializes a whole line.
class Tokenizer {
 public:
  enum class Kind { kInteger, kNewline, kEnd };

  struct Token {
    Kind kind = Kind::kEnd;
    std::int64_t value = 0;
    std::size_t line = 1;
  };

  explicit Tokenizer(std::istream& in) : buf_(in.rdbuf()) {}

  Token Next() {
    for (;;) {
      const int c = Peek();
      if (c == EOF) return {Kind::kEnd, 0, line_};
      if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
        ++pos_;
        continue;
      }
      if (c == '\n') {
        ++pos_;
        return {Kind::kNewline, 0, line_++};
      }
      break;
    }
    std::array<char, kMaxTokenLength> text{};
    std::size_t len = 0;
    for (int c = Peek(); c != EOF && !IsSpace(c); c = Peek()) {
      if (len == text.size()) throw ParseError(line_, "token too long");
      text[len++] = static_cast<char>(c);
      ++pos_;
    }
    std::int64_t value = 0;
    const char* end = text.data() + len;
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw ParseError(line_, "expected an integer, got '" +
                                  std::string(text.data(), len) + "'");
    }
    return {Kind::kInteger, value, line_};
  }

  // Next token that must be an integer on the current line.
  std::int64_t ExpectInteger(const char* what) {
    const Token t = Next();
    if (t.kind != Kind::kInteger) {
      throw ParseError(t.line, std::string("expected ") + what);
    }
    return t.value;
  }

  void ExpectEndOfLine(const char* context) {
    const Token t = Next();
    if (t.kind == Kind::kInteger) {
      throw ParseError(t.line, std::string("unexpected token after ") + context);
    }
    if (t.kind == Kind::kEnd) {
      // A final line without "\n" is accepted.
      at_end_ = true;
    }
  }

  // Only blank lines may remain.
  void ExpectEnd() {
    if (at_end_) return;
    for (;;) {
      const Token t = Next();
      if (t.kind == Kind::kEnd) return;
      if (t.kind == Kind::kInteger) {
        throw ParseError(t.line, "unexpected content after the last job");
      }
    }
  }

  bool at_end() const { return at_end_; }
  std::size_t line() const { return line_; }

 private:
  static bool IsSpace(int c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
           c == '\f';
  }

  int Peek() {
    if (pos_ == len_) {
      len_ = static_cast<std::size_t>(buf_->sgetn(block_.data(),
                                                  static_cast<std::streamsize>(block_.size())));
      pos_ = 0;
      if (len_ == 0) return EOF;
    }
    return static_cast<unsigned char>(block_[pos_]);
  }

  std::streambuf* buf_;
  std::array<char, 1 << 16> block_{};
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
  std::size_t line_ = 1;
  bool at_end_ = false;
};

struct Header {
  std::int64_t jobs = 0;
  std::int64_t machines = 0;
};

Header ReadHeader(Tokenizer& tok) {
  Header h;
  h.jobs = tok.ExpectInteger("job count");
  h.machines = tok.ExpectInteger("machine count");
  if (h.jobs < 1) throw ParseError(1, "job count must be positive");
  if (h.machines < 1 || h.machines > std::numeric_limits<MachineId>::max()) {
    throw ParseError(1, "machine count out of range");
  }
  tok.ExpectEndOfLine("the header");
  if (tok.at_end()) throw ParseError(tok.line(), "missing job lines");
  return h;
}

MachineId CheckMachine(std::int64_t raw, const Header& h,
                       const ParseOptions& options, std::size_t line) {
  const std::int64_t m = raw - options.machine_base;
  if (m < 0 || m >= h.machines) {
    throw ParseError(line, "machine " + std::to_string(raw) + " out of range");
  }
  return static_cast<MachineId>(m);
}

Time CheckDuration(std::int64_t raw, std::size_t line) {
  if (raw < 1) {
    throw ParseError(line, "duration " + std::to_string(raw) +
                               " must be positive");
  }
  return raw;
}

// Buffered integer writer.
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  ~Writer() { Flush(); }

  void Int(std::int64_t v) {
    Reserve(24);
    const auto [ptr, ec] =
        std::to_chars(buf_.data() + len_, buf_.data() + buf_.size(), v);
    len_ = static_cast<std::size_t>(ptr - buf_.data());
  }
  void Char(char c) {
    Reserve(1);
    buf_[len_++] = c;
  }
  void Text(std::string_view s) {
    for (char c : s) Char(c);
  }
  void Flush() {
    out_.write(buf_.data(), static_cast<std::streamsize>(len_));
    len_ = 0;
  }

 private:
  void Reserve(std::size_t n) {
    if (len_ + n > buf_.size()) Flush();
  }

  std::ostream& out_;
  std::array<char, 1 << 16> buf_{};
  std::size_t len_ = 0;
};

std::int64_t ParseCounter(std::string_view text, bool* ok) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  *ok = *ok && ec == std::errc() && ptr == text.data() + text.size() && v >= 0;
  return v;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t at = s.find(sep, begin);
    parts.push_back(s.substr(begin, at - begin));
    if (at == std::string_view::npos) break;
    begin = at + 1;
  }
  return parts;
}

std::string_view StripDataSuffix(std::string_view name, bool* ok) {
  constexpr std::string_view kSuffix = ".data";
  if (name.size() < kSuffix.size() ||
      name.substr(name.size() - kSuffix.size()) != kSuffix) {
    *ok = false;
    return name;
  }
  return name.substr(0, name.size() - kSuffix.size());
}

}  // namespace

Instance ParseLargeTa(std::istream& in, const ParseOptions& options) {
  Tokenizer tok(in);
  const Header h = ReadHeader(tok);
  const auto machines = static_cast<std::size_t>(h.machines);
  InstanceBuilder builder(InstanceKind::kRectangular,
                          static_cast<MachineId>(h.machines));
  std::vector<std::int64_t> seen(machines, -1);
  for (std::int64_t j = 0; j < h.jobs; ++j) {
    builder.BeginJob();
    std::size_t pairs = 0;
    std::size_t line = tok.line();
    for (;;) {
      const Tokenizer::Token t = tok.Next();
      line = t.line;
      if (t.kind == Tokenizer::Kind::kEnd && pairs == 0) {
        throw ParseError(line, "expected " + std::to_string(h.jobs) +
                                   " job lines, found " + std::to_string(j));
      }
      if (t.kind != Tokenizer::Kind::kInteger) {
        if (pairs != machines) {
          throw ParseError(line, "expected " + std::to_string(machines) +
                                     " operations, found " +
                                     std::to_string(pairs));
        }
        break;
      }
      if (pairs == machines) {
        throw ParseError(line, "more than " + std::to_string(machines) +
                                   " operations");
      }
      const MachineId m = CheckMachine(t.value, h, options, line);
      const Tokenizer::Token d = tok.Next();
      if (d.kind != Tokenizer::Kind::kInteger) {
        throw ParseError(line, "machine without a duration");
      }
      if (seen[static_cast<std::size_t>(m)] == j) {
        throw ParseError(line, "machine " + std::to_string(t.value) +
                                   " visited twice by one job");
      }
      seen[static_cast<std::size_t>(m)] = j;
      builder.AddOperation(m, CheckDuration(d.value, line));
      ++pairs;
    }
  }
  tok.ExpectEnd();
  return std::move(builder).Build();
}

Instance ParseKnownOptima(std::istream& in, const ParseOptions& options,
                          std::optional<Time> known_optimum) {
  Tokenizer tok(in);
  const Header h = ReadHeader(tok);
  InstanceBuilder builder(InstanceKind::kFreeForm,
                          static_cast<MachineId>(h.machines));
  for (std::int64_t j = 0; j < h.jobs; ++j) {
    if (tok.at_end()) {
      throw ParseError(tok.line(), "expected " + std::to_string(h.jobs) +
                                       " job lines, found " + std::to_string(j));
    }
    builder.BeginJob();
    std::size_t pairs = 0;
    for (;;) {
      const Tokenizer::Token t = tok.Next();
      if (t.kind != Tokenizer::Kind::kInteger) {
        throw ParseError(t.line, "missing -1 -1 terminator");
      }
      const Tokenizer::Token d = tok.Next();
      if (d.kind != Tokenizer::Kind::kInteger) {
        throw ParseError(t.line, t.value == -1 ? "missing -1 -1 terminator"
                                               : "machine without a duration");
      }
      if (t.value == -1 && d.value == -1) {
        if (pairs == 0) throw ParseError(t.line, "job without operations");
        tok.ExpectEndOfLine("the -1 -1 terminator");
        break;
      }
      const MachineId m = CheckMachine(t.value, h, options, t.line);
      builder.AddOperation(m, CheckDuration(d.value, t.line));
      ++pairs;
    }
  }
  tok.ExpectEnd();
  if (known_optimum) builder.SetKnownOptimum(*known_optimum);
  return std::move(builder).Build();
}

void SerializeLargeTa(const Instance& instance, std::ostream& out) {
  if (instance.kind() != InstanceKind::kRectangular) {
    throw KindError("Large-TA format requires a rectangular instance");
  }
  Writer w(out);
  w.Int(static_cast<std::int64_t>(instance.job_count()));
  w.Char(' ');
  w.Int(instance.machine_count());
  w.Char('\n');
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    bool first = true;
    for (const Operation& op : instance.job(j)) {
      if (!first) w.Char(' ');
      first = false;
      w.Int(op.machine);
      w.Char(' ');
      w.Int(op.duration);
    }
    w.Char('\n');
  }
}

void SerializeKnownOptima(const Instance& instance, std::ostream& out) {
  Writer w(out);
  w.Int(static_cast<std::int64_t>(instance.job_count()));
  w.Char(' ');
  w.Int(instance.machine_count());
  w.Char('\n');
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    for (const Operation& op : instance.job(j)) {
      w.Int(op.machine);
      w.Char(' ');
      w.Int(op.duration);
      w.Char(' ');
    }
    w.Text("-1 -1\n");
  }
}

std::string SerializeLargeTa(const Instance& instance) {
  std::ostringstream out;
  SerializeLargeTa(instance, out);
  return std::move(out).str();
}

std::string SerializeKnownOptima(const Instance& instance) {
  std::ostringstream out;
  SerializeKnownOptima(instance, out);
  return std::move(out).str();
}

std::string LargeTaFileName(const LargeTaName& name) {
  return "tai_j" + std::to_string(name.jobs) + "_m" +
         std::to_string(name.machines) + "_" + std::to_string(name.index) +
         ".data";
}

std::string KnownOptimaFileName(const KnownOptimaName& name) {
  return std::string(name.linking == Linking::kLongJobs ? "long" : "short") +
         "-js-" + std::to_string(name.makespan) + "-" +
         std::to_string(name.machines) + "-" + std::to_string(name.ops) + "-" +
         std::to_string(name.index) + ".data";
}

std::optional<LargeTaName> ParseLargeTaFileName(std::string_view file_name) {
  bool ok = true;
  std::string_view stem = StripDataSuffix(file_name, &ok);
  if (!ok || !stem.starts_with("tai_j")) return std::nullopt;
  stem.remove_prefix(5);
  const std::vector<std::string_view> parts = Split(stem, '_');
  if (parts.size() != 3 || !parts[1].starts_with("m")) return std::nullopt;
  LargeTaName name;
  name.jobs = ParseCounter(parts[0], &ok);
  name.machines = ParseCounter(parts[1].substr(1), &ok);
  name.index = static_cast<int>(ParseCounter(parts[2], &ok));
  if (!ok) return std::nullopt;
  return name;
}

std::optional<KnownOptimaName> ParseKnownOptimaFileName(
    std::string_view file_name) {
  bool ok = true;
  const std::string_view stem = StripDataSuffix(file_name, &ok);
  if (!ok) return std::nullopt;
  const std::vector<std::string_view> parts = Split(stem, '-');
  if (parts.size() != 6 || parts[1] != "js") return std::nullopt;
  KnownOptimaName name;
  if (parts[0] == "long") {
    name.linking = Linking::kLongJobs;
  } else if (parts[0] == "short") {
    name.linking = Linking::kShortJobs;
  } else {
    return std::nullopt;
  }
  name.makespan = ParseCounter(parts[2], &ok);
  name.machines = ParseCounter(parts[3], &ok);
  name.ops = ParseCounter(parts[4], &ok);
  name.index = static_cast<int>(ParseCounter(parts[5], &ok));
  if (!ok || name.makespan < 1) return std::nullopt;
  return name;
}

void WriteCertificate(const Instance& instance, const Schedule& schedule,
                      std::ostream& out) {
  if (schedule.size() != instance.operation_count()) {
    throw Error("certificate size does not match the instance");
  }
  Writer w(out);
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    const std::size_t begin = instance.job_begin(j);
    for (std::size_t k = 0; k < instance.job_size(j); ++k) {
      if (k > 0) w.Char(' ');
      w.Int(schedule.start(begin + k));
    }
    w.Char('\n');
  }
}

void WriteCertificate(const LinkedSolution& solution, std::ostream& out) {
  WriteCertificate(solution.instance, solution.certificate, out);
}

Schedule ReadCertificate(std::istream& in, const Instance& instance) {
  Tokenizer tok(in);
  Schedule schedule = Schedule::For(instance);
  for (std::size_t j = 0; j < instance.job_count(); ++j) {
    const std::size_t begin = instance.job_begin(j);
    const std::size_t expected = instance.job_size(j);
    std::size_t count = 0;
    for (;;) {
      const Tokenizer::Token t = tok.Next();
      if (t.kind == Tokenizer::Kind::kEnd && count == 0) {
        throw ParseError(t.line, "certificate has " + std::to_string(j) +
                                     " lines, instance has " +
                                     std::to_string(instance.job_count()) +
                                     " jobs");
      }
      if (t.kind != Tokenizer::Kind::kInteger) {
        if (count != expected) {
          throw ParseError(t.line, "expected " + std::to_string(expected) +
                                       " start times, found " +
                                       std::to_string(count));
        }
        break;
      }
      if (count == expected) {
        throw ParseError(t.line, "more than " + std::to_string(expected) +
                                     " start times");
      }
      schedule.set_start(begin + count++, t.value);
    }
  }
  tok.ExpectEnd();
  return schedule;
}

std::filesystem::path CertificatePath(const std::filesystem::path& instance) {
  std::filesystem::path p = instance;
  p.replace_extension(".sol");
  return p;
}

const char* ToString(BenchmarkKind kind) {
  return kind == BenchmarkKind::kLargeTa ? "large-ta" : "known-optima";
}

std::optional<BenchmarkKind> ParseBenchmarkKind(std::string_view text) {
  if (text == "large-ta") return BenchmarkKind::kLargeTa;
  if (text == "known-optima") return BenchmarkKind::kKnownOptima;
  return std::nullopt;
}

Instance ReadInstanceFile(const std::filesystem::path& path,
                          BenchmarkKind kind, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  try {
    if (kind == BenchmarkKind::kLargeTa) return ParseLargeTa(in, options);
    std::optional<Time> optimum;
    if (const auto name = ParseKnownOptimaFileName(path.filename().string())) {
      optimum = name->makespan;
    }
    return ParseKnownOptima(in, options, optimum);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.filename().string() + ": " + e.detail());
  }
}

void WriteInstanceFile(const std::filesystem::path& path,
                       const Instance& instance, BenchmarkKind kind) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot create " + path.string());
  if (kind == BenchmarkKind::kLargeTa) {
    SerializeLargeTa(instance, out);
  } else {
    SerializeKnownOptima(instance, out);
  }
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace jsspbench
