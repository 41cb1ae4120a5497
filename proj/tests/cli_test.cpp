// Copyright 2026 The vecfdp Authors
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

#include "vecfdp/cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vecfdp/commands.hpp"
#include "vecfdp/errors.hpp"
#include "vecfdp/insample.hpp"
#include "vecfdp/io.hpp"

namespace vecfdp {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "vecfdp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  fs::path p = fs::temp_directory_path() / ("vecfdp_cli_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

std::string ants() { return std::string(VECFDP_SOURCE_DIR) + "/data/ants_summary_matched.csv"; }

const char* kToy = "species,count_1,count_2\na,2,1\nb,2,0\nc,0,3\n";
const char* kFreqToy = "species,count_1,count_2\na,1,1\nb,2,0\nc,1,3\nd,0,1\n";

TEST(Ingest, ToyTable) {
  std::istringstream in(kToy);
  InSampleCounts c = read_abundance_csv(in, "toy").summary();
  EXPECT_EQ(c.r, 3);
  EXPECT_EQ(c.t, 1);
  EXPECT_EQ(c.n1, 4);
  EXPECT_EQ(c.n2, 4);
}

TEST(Ingest, AntsSummary) {
  InSampleCounts c = read_abundance_csv(ants()).summary();
  EXPECT_EQ(c.n1, 934);
  EXPECT_EQ(c.n2, 2235);
  EXPECT_EQ(c.r1, 17);
  EXPECT_EQ(c.r2, 23);
  EXPECT_EQ(c.r, 30);
  EXPECT_EQ(c.t, 10);
}

TEST(Ingest, RejectsBadRows) {
  auto fails_at = [](const std::string& body, const std::string& needle) {
    std::istringstream in(body);
    try {
      read_abundance_csv(in, "f.csv");
    } catch (const InputError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  EXPECT_TRUE(fails_at("species,count_1,count_2\na,1,1\nx,0,0\n", "f.csv:3"));
  EXPECT_TRUE(fails_at("species,count_1,count_2\na,1,1\na,2,0\n", "f.csv:3"));
  EXPECT_TRUE(fails_at("species,count_1,count_2\na,1,x\n", "f.csv:2"));
  EXPECT_TRUE(fails_at("species,count_1,count_2\na,1,-2\n", "negative"));
  EXPECT_TRUE(fails_at("species,count_1,count_2\na,1\n", "3 fields"));
  EXPECT_TRUE(fails_at("name,c1,c2\na,1,1\n", "f.csv:1"));
  EXPECT_TRUE(fails_at("species,count_1,count_2\n", "no species"));
  std::istringstream crlf("species,count_1,count_2\r\na,1,2\r\n");
  EXPECT_EQ(read_abundance_csv(crlf, "crlf").summary().n2, 2);
}

TEST(Ingest, WriteThenReadIsIdentity) {
  AbundanceTable t = read_abundance_csv(ants());
  std::ostringstream out;
  write_abundance_csv(out, t);
  std::istringstream in(out.str());
  AbundanceTable back = read_abundance_csv(in, "copy");
  EXPECT_EQ(back.labels(), t.labels());
  EXPECT_EQ(back.counts1(), t.counts1());
  EXPECT_EQ(back.counts2(), t.counts2());
}

TEST(ExitCodes, InputNumericalValidation) {
  EXPECT_EQ(run({"fit", write_temp("zero.csv", "species,count_1,count_2\nx,0,0\n")}).code,
            kExitInput);
  EXPECT_EQ(run({"fit", "/nonexistent/file.csv"}).code, kExitInput);
  EXPECT_EQ(run({"bogus"}).code, kExitInput);
  EXPECT_EQ(run({"fit", ants(), "--mode", "median"}).code, kExitInput);
  CliRun one = run({"fit", write_temp("one.csv", "species,count_1,count_2\nx,5,5\n")});
  EXPECT_EQ(one.code, kExitNumerical);
  EXPECT_NE(one.err.find("numerical error"), std::string::npos);
  EXPECT_EQ(run({"validate", "--draws", "100"}).code, kExitValidation);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Fit, ToyAndAnts) {
  Json toy = run({"fit", write_temp("toy.csv", kToy)}).json();
  EXPECT_DOUBLE_EQ(toy["diversity"]["simpson1"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(toy["diversity"]["simpson2"].get<double>(), 0.625);
  EXPECT_DOUBLE_EQ(toy["diversity"]["cross_product"].get<double>(), 0.125);
  CliRun r = run({"fit", ants()});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  for (const char* k : {"lambda", "gamma1", "gamma2"}) {
    EXPECT_LT(std::abs(j["residuals"][k].get<double>()), 1e-10);
    EXPECT_GT(j["params"][k].get<double>(), 0.0);
  }
  Json unb = run({"fit", ants(), "--mode", "unbiased"}).json();
  EXPECT_EQ(unb["diversity"]["mode"], "unbiased");
}

TEST(Insample, SmallSizesListJointLaws) {
  CliRun r = run({"insample", ants(), "--lambda", "2", "--gamma1", "0.5", "--gamma2", "1.5",
               "--n1", "4", "--n2", "3", "--top", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["params"]["source"], "given");
  EXPECT_NEAR(j["joint"]["total"].get<double>(), 1.0, 1e-12);
  EXPECT_FALSE(j["joint"]["truncated"].get<bool>());
  auto e = j["expected"];
  EXPECT_NEAR(e["s"].get<double>(),
              e["k1"].get<double>() + e["k2"].get<double>() - e["k"].get<double>(), 1e-12);
  EXPECT_NEAR(j["correlation"].get<double>(),
              correlation({0.5, 1.5, MPrior::one_shifted_poisson(2.0)}), 1e-15);
}

TEST(Insample, LargeSizesSkipJointLaws) {
  CliRun r = run({"insample", ants()});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_TRUE(j["joint"].is_null());
  EXPECT_NEAR(j["local1"]["total"].get<double>(), 1.0, 1e-9);
  EXPECT_TRUE(j["local1"]["truncated"].get<bool>());
  EXPECT_TRUE(j["expected"]["s"].is_null());
}

TEST(Predict, ConsistentWithDiscover) {
  Json p = run({"predict", ants(), "--m1", "1", "--m2", "1"}).json();
  Json d = run({"discover", ants()}).json();
  double s0 = d["one_step_shared"]["entries"][0]["p"].get<double>();
  EXPECT_NEAR(p["coverage"]["p"].get<double>(), s0, 1e-12);
  EXPECT_NEAR(p["shared"]["entries"][0]["p"].get<double>(), s0, 1e-10);
  Json zero = run({"predict", ants(), "--m1", "0", "--m2", "0"}).json();
  EXPECT_EQ(zero["expected_new"]["k"].get<double>(), 0.0);
  Json big = run({"predict", ants(), "--m1", "500", "--m2", "500"}).json();
  EXPECT_EQ(big["expected_new"]["method"], "mixture");
  EXPECT_TRUE(big["joint"].is_null());
  EXPECT_GE(big["expected_new"]["s"].get<double>(), p["expected_new"]["s"].get<double>());
}

TEST(Discover, AntsPositive) {
  CliRun r = run({"discover", ants()});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  double disc = j["discovery_probability"]["p"].get<double>();
  EXPECT_GT(disc, 0.0);
  EXPECT_NEAR(disc, 1.0 - j["one_step_shared"]["entries"][0]["p"].get<double>(), 1e-12);
  auto c = j["pair_cells"];
  EXPECT_NEAR(c["old_old"].get<double>() + c["new_old"].get<double>() +
                  c["old_new"].get<double>() + c["new_new"].get<double>(),
              1.0, 1e-12);
}

TEST(Curve, GridRows) {
  CliRun r = run({"curve", ants(), "--grid", "20:10:5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "m1,m2,expected_k,expected_s,coverage");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows.front(), "0,0,0,0,1");
  EXPECT_EQ(rows.back().rfind("20,10,", 0), 0u);
  Json j = run({"curve", ants(), "--grid", "20:10:5", "--format", "json"}).json();
  double prev = -1;
  for (const auto& row : j) {
    EXPECT_GE(row["expected_s"].get<double>(), prev);
    prev = row["expected_s"].get<double>();
  }
  EXPECT_EQ(run({"curve", ants(), "--grid", "20:10"}).code, kExitInput);
  EXPECT_EQ(run({"curve", ants(), "--grid", "20:10:0"}).code, kExitInput);
}

TEST(Baselines, HandValues) {
  Json j = run({"baselines", write_temp("freq.csv", kFreqToy)}).json();
  EXPECT_EQ(j["frequencies"]["f_1plus"], 2);
  EXPECT_EQ(j["frequencies"]["f_plus1"], 1);
  EXPECT_EQ(j["frequencies"]["f_11"], 1);
  EXPECT_DOUBLE_EQ(j["chao_shared"]["value"].get<double>(), 0.75);
  EXPECT_TRUE(j["yue"].is_null());
  EXPECT_EQ(j["chao2000"], "unavailable");
  Json y = run({"baselines", write_temp("yue.csv", "species,count_1,count_2\na,1,1\nb,2,1\nc,1,2\n")})
               .json();
  EXPECT_DOUBLE_EQ(y["yue"]["value"].get<double>(), 1.25);
  EXPECT_TRUE(y["yue"]["exceeds_one"].get<bool>());
}

TEST(Simulate, DeterministicUnderSeed) {
  CliRun a = run({"simulate", "1", "--replications", "2", "--seed", "7"});
  CliRun b = run({"simulate", "1", "--replications", "2", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')),
            "alpha1,alpha2,n,method,median,q1,q3,count,failures,above_one");
  CliRun c = run({"simulate", "2", "--replications", "2", "--seed", "7", "--format", "json"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.json().size(), 9u);
  EXPECT_EQ(run({"simulate", "3"}).code, kExitInput);
}

TEST(Reports, JsonRoundTripIsByteIdentical) {
  std::vector<std::vector<std::string>> cmds{
      {"fit", ants()},
      {"insample", ants(), "--n1", "5", "--n2", "6"},
      {"predict", ants(), "--m1", "3", "--m2", "2"},
      {"discover", ants()},
      {"baselines", ants()},
      {"curve", ants(), "--grid", "10:10:5", "--format", "json"}};
  for (const auto& cmd : cmds) {
    CliRun r = run(cmd);
    ASSERT_EQ(r.code, 0) << cmd[0] << ": " << r.err;
    EXPECT_EQ(reemit_json(r.out), r.out) << cmd[0];
  }
}

TEST(Reports, NonFiniteBecomesNull) {
  EXPECT_TRUE(json_prob(LogValue::zero())["log_p"].is_null());
  EXPECT_EQ(json_prob(LogValue::zero())["p"].get<double>(), 0.0);
  EXPECT_EQ(format_number(NAN), "NA");
  EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(Reports, OutputFile) {
  std::string path = (fs::temp_directory_path() / "vecfdp_cli_test_out.json").string();
  CliRun r = run({"fit", ants(), "-o", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"fit", ants()}).out);
}

}  // namespace
}  // namespace vecfdp
