// Copyright 2026 The nihobent Authors.
//
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "nihobent/boolfn.hpp"
#include "nihobent/io.hpp"
#include "nihobent/niho.hpp"

namespace nihobent {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + NIHOBENT_CLI + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nihobent_cli_" + name);
}

TEST(CliTest, BuildThenCheckRoundTrip) {
  const auto path = temp("b3.tt");
  const CliRun b = run("--json build --family binomial3 --m 3 --b 0x5 --out " + path.string());
  ASSERT_EQ(b.code, 0) << b.out;
  const Json report = Json::parse(b.out);
  EXPECT_EQ(report["bent"], true);
  EXPECT_EQ(report["degree"], 3);

  const Field big(6);
  const Elem a = big.pow(5, 9);
  const TruthTable expected = eval_trace_form(build_bent(
      {Family::kBinomial3, 3, FieldElement(big, a), FieldElement(big, 5)}));
  EXPECT_EQ(read_truth_table(path), expected);
  EXPECT_EQ(trace_form_from_json(report["trace_form"], big).terms(),
            build_bent({Family::kBinomial3, 3, FieldElement(big, a), FieldElement(big, 5)})
                .terms());

  const CliRun c = run("--json check --spectrum " + path.string());
  ASSERT_EQ(c.code, 0);
  const Json check = Json::parse(c.out);
  EXPECT_EQ(check["bent"], true);
  EXPECT_EQ(check["degree"], anf_degree(expected));
  EXPECT_EQ(check["niho"], true);
  EXPECT_EQ(check["spectrum"].get<std::vector<std::int64_t>>(),
            walsh_spectrum(expected, big).values);
  std::filesystem::remove(path);
}

TEST(CliTest, QuadraticExample) {
  const auto path = temp("q.tt");
  const CliRun b = run("build --family quadratic --m 2 --a 0x1 --out " + path.string());
  ASSERT_EQ(b.code, 0);
  const TruthTable t = read_truth_table(path);
  EXPECT_EQ(t.bits.size(), 16u);
  EXPECT_TRUE(is_bent(t));
  std::filesystem::remove(path);
}

TEST(CliTest, ZeroFunctionCheck) {
  const auto path = temp("zero.tt");
  write_truth_table(TruthTable::zeros(4), path);
  const Json j = Json::parse(run("--json check " + path.string()).out);
  EXPECT_EQ(j["bent"], false);
  EXPECT_EQ(j["degree"], 0);
  std::filesystem::remove(path);
}

TEST(CliTest, NonFifthPowerWarning) {
  const CliRun r = run("--json build --family binomial3 --m 2 --b 0x2");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["bent"], true);
  EXPECT_EQ(j["warnings"].size(), 1u);
  EXPECT_EQ(j["family_report"]["fifth_power"], false);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run("build --family binomial4 --m 4").code, 2);
  EXPECT_EQ(run("build --family binomial3 --m 2 --b 0x2 --strict").code, 2);
  EXPECT_EQ(run("build --family nonsense --m 2").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("check /nonexistent/file").code, 2);
  EXPECT_EQ(run("correspond subiaco --m 4 --b 0x2").code, 2);
  EXPECT_EQ(run("correspond subiaco --m 3 --b 0x1", "NIHOBENT_THREADS=0").code, 2);
  EXPECT_EQ(run("correspond subiaco --m 3 --b 0x1", "NIHOBENT_THREADS=2").code, 0);
}

TEST(CliTest, CorrespondExamples) {
  const Json one = Json::parse(run("--json correspond subiaco --m 3 --b 0x1").out);
  ASSERT_EQ(one["records"].size(), 1u);
  EXPECT_EQ(one["records"][0]["verified"], true);
  EXPECT_EQ(one["records"][0]["s"], "0x0");

  const Json sweep2 = Json::parse(run("--json correspond subiaco --m 2").out);
  EXPECT_EQ(sweep2["records"].size(), 15u);
  EXPECT_EQ(sweep2["verified_count"], 15);

  const Json adel = Json::parse(run("--json correspond adelaide --m 4").out);
  EXPECT_EQ(adel["records"].size(), 16u);
  EXPECT_EQ(adel["verified_count"], 16);
}

TEST(CliTest, OutputIsDeterministicAcrossThreadCounts) {
  const std::string args = "--json correspond subiaco --m 3";
  EXPECT_EQ(run(args, "NIHOBENT_THREADS=1").out, run(args, "NIHOBENT_THREADS=3").out);
}

TEST(CliTest, OpolyExamples) {
  const Json sub = Json::parse(run("--json opoly --source subiaco --case i --m 5").out);
  EXPECT_EQ(sub["records"].size(), 33u);  // g and 32 values of s
  for (const auto& r : sub["records"]) EXPECT_EQ(r["is_opoly"], true);

  const Json frob = Json::parse(run("--json opoly --source frobenius --m 6 --k 1").out);
  EXPECT_EQ(frob["records"][0]["is_opoly"], true);

  const auto path = temp("id.json");
  std::ofstream(path) << R"(["0x0","0x1","0x2","0x3","0x4","0x5","0x6","0x7"])";
  const CliRun id = run("--json opoly --source file --file " + path.string());
  EXPECT_EQ(id.code, 0);
  EXPECT_EQ(Json::parse(id.out)["records"][0]["is_opoly"], false);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace nihobent
