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

#include <sstream>
#include <string>

#include "jsspbench/errors.h"
#include "jsspbench/formats.h"
#include "jsspbench/known_optima.h"
#include "jsspbench/random.h"
#include "jsspbench/taillard.h"
#include "test_util.h"

namespace jsspbench {
namespace {

using testing::MakeInstance;

Instance LargeTa(const std::string& text, ParseOptions options = {}) {
  std::istringstream in(text);
  return ParseLargeTa(in, options);
}

Instance KnownOptima(const std::string& text) {
  std::istringstream in(text);
  return ParseKnownOptima(in);
}

template <typename F>
std::size_t ErrorLine(F&& parse) {
  try {
    parse();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseLargeTaTest, Minimal) {
  const Instance inst = LargeTa("1 1\n0 5\n");
  ASSERT_EQ(inst.job_count(), 1u);
  EXPECT_EQ(inst.machine_count(), 1);
  EXPECT_EQ(inst.job(0)[0], (Operation{0, 5}));
  EXPECT_EQ(inst.kind(), InstanceKind::kRectangular);
}

TEST(ParseLargeTaTest, TenByTen) {
  const Instance generated = GenerateRectangular({10, 10, 1, 99, 1});
  const Instance parsed = LargeTa(SerializeLargeTa(generated));
  EXPECT_EQ(parsed.operation_count(), 100u);
  EXPECT_EQ(parsed, generated);
}

TEST(ParseLargeTaTest, ToleratesWhitespaceAndCrLf) {
  const Instance inst = LargeTa("2   2\r\n 0 3\t1 4 \r\n1  2 0 1\r\n\r\n\n");
  EXPECT_EQ(inst, MakeInstance(2, {{{0, 3}, {1, 4}}, {{1, 2}, {0, 1}}},
                               InstanceKind::kRectangular));
  // Missing final newline.
  EXPECT_EQ(LargeTa("1 1\n0 5").operation_count(), 1u);
}

TEST(ParseLargeTaTest, OneBasedInput) {
  ParseOptions one_based;
  one_based.machine_base = 1;
  const Instance inst = LargeTa("1 2\n2 3 1 4\n", one_based);
  EXPECT_EQ(inst.job(0)[0].machine, 1);
  EXPECT_EQ(inst.job(0)[1].machine, 0);
  EXPECT_EQ(ErrorLine([] { LargeTa("1 2\n2 3 1 4\n"); }), 2u);
}

TEST(ParseLargeTaTest, ErrorsCarryLineNumbers) {
  // Wrong pair count.
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 1 1 1\n0 1\n"); }), 3u);
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 1 1 1 0\n1 1 0 1\n"); }), 2u);
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 1 1 1 1 2\n1 1 0 1\n"); }), 2u);
  // Non-integer token.
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 1 1 1\n1 x 0 1\n"); }), 3u);
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 1 1 1.5\n1 1 0 1\n"); }), 2u);
  // Machine out of range.
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 1 2 1\n1 1 0 1\n"); }), 2u);
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 1 1 1\n-1 1 0 1\n"); }), 3u);
  // Same machine twice in one job.
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 1 1 1\n1 1 1 1\n"); }), 3u);
  // Non-positive duration.
  EXPECT_EQ(ErrorLine([] { LargeTa("2 2\n0 0 1 1\n1 1 0 1\n"); }), 2u);
  // Too few / too many job lines.
  EXPECT_EQ(ErrorLine([] { LargeTa("3 2\n0 1 1 1\n1 1 0 1\n"); }), 4u);
  EXPECT_EQ(ErrorLine([] { LargeTa("1 2\n0 1 1 1\n1 1 0 1\n"); }), 3u);
  // Header problems.
  EXPECT_EQ(ErrorLine([] { LargeTa("2\n0 1\n"); }), 1u);
  EXPECT_EQ(ErrorLine([] { LargeTa("0 2\n"); }), 1u);
  EXPECT_EQ(ErrorLine([] { LargeTa("1 1 1\n0 1\n"); }), 1u);
  EXPECT_EQ(ErrorLine([] { LargeTa(""); }), 1u);
  // Oversized token.
  EXPECT_EQ(ErrorLine([] { LargeTa("1 1\n0 " + std::string(100, '9') + "\n"); }), 2u);
}

TEST(ParseKnownOptimaTest, SingleOperationJob) {
  const Instance inst = KnownOptima("1 1\n0 5 -1 -1\n");
  ASSERT_EQ(inst.job_count(), 1u);
  EXPECT_EQ(inst.job(0).size(), 1u);
  EXPECT_EQ(inst.kind(), InstanceKind::kFreeForm);
  EXPECT_FALSE(inst.known_optimum());
}

TEST(ParseKnownOptimaTest, VariableLengthJobsWithRepeats) {
  const Instance inst = KnownOptima("2 3\n0 5 0 6 2 1 -1 -1\n1 4 -1 -1\n");
  EXPECT_EQ(inst, MakeInstance(3, {{{0, 5}, {0, 6}, {2, 1}}, {{1, 4}}}));
}

TEST(ParseKnownOptimaTest, Errors) {
  EXPECT_EQ(ErrorLine([] { KnownOptima("1 1\n0 5\n"); }), 2u);          // no sentinel
  EXPECT_EQ(ErrorLine([] { KnownOptima("1 1\n0 5 -1\n"); }), 2u);       // half sentinel
  EXPECT_EQ(ErrorLine([] { KnownOptima("1 1\n0 5 -1 -1 0\n"); }), 2u);  // after sentinel
  EXPECT_EQ(ErrorLine([] { KnownOptima("1 1\n-1 -1\n"); }), 2u);        // empty job
  EXPECT_EQ(ErrorLine([] { KnownOptima("2 1\n0 5 -1 -1\n"); }), 3u);    // job count
  EXPECT_EQ(ErrorLine([] { KnownOptima("1 1\n0 5 -1 -1\n0 5 -1 -1\n"); }), 3u);
  EXPECT_EQ(ErrorLine([] { KnownOptima("1 1\n0 -1 -1 -1\n"); }), 2u);   // bad duration
  EXPECT_EQ(ErrorLine([] { KnownOptima("1 2\n2 5 -1 -1\n"); }), 2u);    // machine range
  EXPECT_EQ(ErrorLine([] { KnownOptima("1 2\n0 5\n-1 -1\n"); }), 2u);   // split line
}

TEST(SerializeTest, ExactBytes) {
  EXPECT_EQ(SerializeLargeTa(MakeInstance(1, {{{0, 5}}}, InstanceKind::kRectangular)),
            "1 1\n0 5\n");
  EXPECT_EQ(SerializeKnownOptima(MakeInstance(1, {{{0, 5}}})), "1 1\n0 5 -1 -1\n");
  EXPECT_EQ(SerializeKnownOptima(MakeInstance(3, {{{0, 5}, {2, 7}}, {{1, 1}}})),
            "2 3\n0 5 2 7 -1 -1\n1 1 -1 -1\n");
}

TEST(SerializeTest, LargeTaRejectsFreeForm) {
  EXPECT_THROW(SerializeLargeTa(MakeInstance(1, {{{0, 5}}})), KindError);
}

// parse(serialize(x)) == x for random instances of both kinds, and
// serialize(parse(f)) == f for every emitted file.
TEST(FormatProperty, RoundTrip) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance rect = GenerateRectangular(
        {rng.UniformInt(1, 8), static_cast<MachineId>(rng.UniformInt(1, 8)), 1, 99,
         rng.Next()});
    const std::string rect_text = SerializeLargeTa(rect);
    EXPECT_EQ(LargeTa(rect_text), rect);
    EXPECT_EQ(SerializeLargeTa(LargeTa(rect_text)), rect_text);

    GenerationConfig c;
    c.machine_count = static_cast<MachineId>(rng.UniformInt(1, 6));
    c.total_ops = c.machine_count * rng.UniformInt(1, 6);
    c.target_makespan = 1000;
    c.seed = rng.Next();
    c.linking = trial % 2 ? Linking::kLongJobs : Linking::kShortJobs;
    const Instance free_form = GenerateKnownOptima(c).instance.with_known_optimum(std::nullopt);
    const std::string ko_text = SerializeKnownOptima(free_form);
    EXPECT_EQ(KnownOptima(ko_text), free_form);
    EXPECT_EQ(SerializeKnownOptima(KnownOptima(ko_text)), ko_text);
  }
}

TEST(FileNameTest, LargeTa) {
  EXPECT_EQ(LargeTaFileName({10, 10, 1}), "tai_j10_m10_1.data");
  const auto n = ParseLargeTaFileName("tai_j1000_m100_7.data");
  ASSERT_TRUE(n);
  EXPECT_EQ(n->jobs, 1000);
  EXPECT_EQ(n->machines, 100);
  EXPECT_EQ(n->index, 7);
  EXPECT_FALSE(ParseLargeTaFileName("tai_j10_m10.data"));
  EXPECT_FALSE(ParseLargeTaFileName("tai_j10_m10_1.txt"));
}

TEST(FileNameTest, KnownOptima) {
  const auto n = ParseKnownOptimaFileName("long-js-600000-100-10000-1.data");
  ASSERT_TRUE(n);
  EXPECT_EQ(n->linking, Linking::kLongJobs);
  EXPECT_EQ(n->makespan, 600000);
  EXPECT_EQ(n->machines, 100);
  EXPECT_EQ(n->ops, 10000);
  EXPECT_EQ(n->index, 1);
  EXPECT_EQ(KnownOptimaFileName(*n), "long-js-600000-100-10000-1.data");
  EXPECT_FALSE(ParseKnownOptimaFileName("medium-js-600000-100-10000-1.data"));
  EXPECT_FALSE(ParseKnownOptimaFileName("long-js-600000-100-1.data"));
  EXPECT_FALSE(ParseKnownOptimaFileName("long-js-x-100-10000-1.data"));
}

TEST(CertificateTest, SingleStart) {
  const Instance inst = MakeInstance(1, {{{0, 5}}});
  std::istringstream in("0\n");
  const Schedule s = ReadCertificate(in, inst);
  EXPECT_EQ(s.start(0), 0);
  std::ostringstream out;
  WriteCertificate(inst, s, out);
  EXPECT_EQ(out.str(), "0\n");
}

TEST(CertificateTest, ReadWriteIdentity) {
  GenerationConfig c;
  c.machine_count = 5;
  c.total_ops = 40;
  c.target_makespan = 300;
  c.seed = 12;
  const LinkedSolution solution = GenerateKnownOptima(c);
  std::stringstream buf;
  WriteCertificate(solution, buf);
  EXPECT_EQ(ReadCertificate(buf, solution.instance), solution.certificate);
}

TEST(CertificateTest, LengthMismatch) {
  const Instance inst = MakeInstance(2, {{{0, 5}, {1, 2}}, {{1, 1}}});
  auto read = [&](const std::string& text) {
    std::istringstream in(text);
    return ReadCertificate(in, inst);
  };
  EXPECT_NO_THROW(read("0 5\n0\n"));
  EXPECT_EQ(ErrorLine([&] { read("0\n0\n"); }), 1u);
  EXPECT_EQ(ErrorLine([&] { read("0 5 6\n0\n"); }), 1u);
  EXPECT_EQ(ErrorLine([&] { read("0 5\n"); }), 2u);
  EXPECT_EQ(ErrorLine([&] { read("0 5\n0\n7\n"); }), 3u);
}

TEST(CertificateTest, PathBesideInstance) {
  EXPECT_EQ(CertificatePath("bench/1/long-js-600000-100-10000-1.data"),
            std::filesystem::path("bench/1/long-js-600000-100-10000-1.sol"));
}

TEST(BenchmarkKindTest, Names) {
  EXPECT_EQ(ParseBenchmarkKind("large-ta"), BenchmarkKind::kLargeTa);
  EXPECT_EQ(ParseBenchmarkKind("known-optima"), BenchmarkKind::kKnownOptima);
  EXPECT_FALSE(ParseBenchmarkKind("classic"));
}

}  // namespace
}  // namespace jsspbench
