// Copyright 2026 The qgen Authors
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
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qgen/cli/json_value.hpp"
#include "qgen/cli/query.hpp"
#include "qgen/cli/table.hpp"

namespace qgen::cli {
namespace {

struct Proc {
  int status = -1;
  std::string out;
};

Proc qgen(const std::string& args, const std::string& env = "") {
  Proc r;
  const std::string cmd = env + " " + std::string(QGEN_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Json value_of(const std::string& args) {
  Proc r = qgen(args);
  EXPECT_EQ(r.status, 0) << args;
  return Json::parse(r.out).at("value");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, DocumentedQueries) {
  EXPECT_EQ(value_of("genocchi --n 6"), "-3");
  EXPECT_EQ(value_of("qnum --n 3 --q 1/2"), "7/4");
  Json sym = value_of("qeuler --m 1 --h 1 --k 1 --x 0 --symbolic");
  EXPECT_EQ(sym, Json::parse(R"({"num":["0","-1"],"den":["1","0","1"]})"));
  EXPECT_EQ(value_of("qeuler --m 1 --h 1 --k 1 --x 0 --mode symbolic"), sym);
}

TEST(Cli, FamiliesAgreeWithLibraryExamples) {
  EXPECT_EQ(value_of("euler --n 3"), "1/4");
  EXPECT_EQ(value_of("euler --n 1 --poly"), Json::parse(R"({"x":["-1/2","1"]})"));
  EXPECT_EQ(value_of("euler --n 2 --r 2"), "1/2");
  EXPECT_EQ(value_of("genocchi --n 4 --r 2"), "6");
  EXPECT_EQ(value_of("bernoulli --n 2"), "1/6");
  EXPECT_EQ(value_of("frobenius --n 1 --u 3"), "1/2");
  EXPECT_EQ(value_of("qbinom --n 4 --k 2 --symbolic"), Json::parse(R"({"num":["1","1","2","1","1"],"den":["1"]})"));
  EXPECT_EQ(value_of("twisted-euler --n 1 --w 1/2"), "-4/9");
  EXPECT_EQ(value_of("twisted-euler --n 1 --w 1/2 --q 1/2"), "-4/15");
  EXPECT_EQ(value_of("twisted-genocchi --n 2 --w 1/2 --q 1/2"), "-8/15");
  EXPECT_EQ(value_of("qgenocchi --n 2 --q 1/2"), "-4/5");
  EXPECT_EQ(value_of("qeuler --m 0 --h 1 --k 2 --w 1/2 --q 1/2"), "6/5");
}

TEST(Cli, DegenerateQGoesThroughTheLimit) {
  EXPECT_EQ(value_of("qnum --n 5 --q 1"), "5");
  EXPECT_EQ(value_of("qeuler --m 2 --h 2 --k 2 --x 1 --q 1"), value_of("euler --n 2 --r 2 --x 1"));
  EXPECT_EQ(value_of("qgenocchi --n 6 --q 1"), "-3");
}

TEST(Cli, PadicAndSeriesModes) {
  Json p = Json::parse(qgen("qeuler --m 1 --q 4 --mode padic --N 5").out);
  EXPECT_EQ(p.at("meta").at("valuations"), Json::parse("[1,2,3,4,5]"));
  EXPECT_TRUE(p.at("meta").at("verdict").get<bool>());
  Json c = Json::parse(qgen("qeuler --m 0 --h 1 --k 1 --q 1 --mode padic --N 2").out);
  EXPECT_EQ(c.at("meta").at("valuations"), Json::parse(R"(["inf","inf"])"));
  Json s = Json::parse(qgen("qeuler --m 1 --h 1 --k 1 --q 1/2 --mode series --M 60").out);
  EXPECT_EQ(s.at("meta").at("summation"), "direct");
  Rat err = (Rat::parse(s.at("value").get<std::string>()) - Rat(-2, 5)).abs();
  EXPECT_LE(err, Rat::parse(s.at("meta").at("tail_bound").get<std::string>()));
  Json b = Json::parse(qgen("qeuler --m 0 --h 0 --k 1 --q 1/2 --mode series").out);
  EXPECT_EQ(b.at("value"), "3/4");
  EXPECT_EQ(b.at("meta").at("summation"), "cesaro1");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(qgen("").status, 2);
  EXPECT_EQ(qgen("nosuchfamily --n 1").status, 2);
  EXPECT_EQ(qgen("genocchi --n x").status, 2);
  EXPECT_EQ(qgen("genocchi --n 1/2").status, 2);
  EXPECT_EQ(qgen("genocchi --n 1 --q 2").status, 2);
  EXPECT_EQ(qgen("qnum --n 3").status, 2);
  EXPECT_EQ(qgen("qnum --n 3 --q 1/2 --mode padic").status, 2);
  EXPECT_EQ(qgen("qeuler --m 0 --w -1/2 --q 2").status, 1);
  EXPECT_EQ(qgen("frobenius --n 2 --u 1").status, 1);
  EXPECT_EQ(qgen("qeuler --m 1 --h 0 --k 1 --q 2 --mode series").status, 1);
  EXPECT_EQ(qgen("qeuler --m 1 --h 3 --k 3 --q 4 --mode padic --N 5").status, 1);
  EXPECT_EQ(qgen("qeuler --m 1 --q 2 --mode padic").status, 1);
  EXPECT_EQ(qgen("verify nosuchsuite").status, 2);
}

TEST(Cli, Determinism) {
  for (const char* q : {"qgenocchi --n 4 --h 1 --k 2 --symbolic", "gf --kind F_qk --q 1/2 --t 1/4 --M 50",
                        "qeuler --m 3 --h 2 --k 2 --q 4 --mode padic"}) {
    Proc a = qgen(q), b = qgen(q);
    EXPECT_EQ(a.status, 0) << q;
    EXPECT_EQ(a.out, b.out) << q;
  }
}

TEST(Cli, SerializationRoundTrip) {
  for (long n = 0; n <= 6; ++n) {
    Json v = value_of("qgenocchi --n " + std::to_string(n) + " --h 2 --k 2 --symbolic");
    EXPECT_EQ(to_json(qrat_from_json(v)), v);
    Json e = value_of("qeuler --m " + std::to_string(n) + " --h 1 --k 2 --x 1 --q 2/7");
    EXPECT_EQ(Rat::parse(e.get<std::string>()).to_string(), e.get<std::string>());
  }
}

TEST(Cli, Tables) {
  EXPECT_EQ(qgen("table --family genocchi --range n=0..8 --format csv").out,
            "n,value\n0,0\n1,1\n2,-1\n3,0\n4,1\n5,0\n6,-3\n7,0\n8,17\n");
  Json rows = Json::parse(qgen("table --family qgenocchi --h 1 --k 1 --symbolic --range n=0..3").out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].at("value"), "1");
  EXPECT_TRUE(rows[1].at("value").is_object());
  const std::string path = "/tmp/qgen_cli_test_empty.csv";
  Proc empty = qgen("table --family genocchi --range n=5..2 --format csv --out " + path);
  EXPECT_EQ(empty.status, 0);
  EXPECT_EQ(slurp(path), "n,value\n");
  EXPECT_EQ(qgen("table --family genocchi --range n=5..2").out, "[]\n");
  std::string two = qgen("table --family qbinom --q 2 --range n=0..2 --range2 k=0..1 --format csv").out;
  EXPECT_EQ(two, "n,k,value\n0,0,1\n0,1,0\n1,0,1\n1,1,1\n2,0,1\n2,1,3\n");
  EXPECT_EQ(qgen("table --family genocchi --range n=0..20000 --format csv").status, 1);
  EXPECT_EQ(qgen("table --family genocchi --n 3 --range n=0..2").status, 2);
  EXPECT_EQ(qgen("table --family genocchi --range z=0..2").status, 2);
}

TEST(Cli, ConfigPrecedence) {
  const std::string path = "/tmp/qgen_cli_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"N": 4, "M": 30, "table_budget": 5})";
  }
  const std::string env = "QGEN_CONFIG=" + path;
  Json p = Json::parse(qgen("qeuler --m 1 --q 4 --mode padic", env).out);
  EXPECT_EQ(p.at("meta").at("N"), 4);
  Json flag = Json::parse(qgen("qeuler --m 1 --q 4 --mode padic --N 2", env).out);
  EXPECT_EQ(flag.at("meta").at("N"), 2);
  Json s = Json::parse(qgen("qeuler --m 1 --q 1/2 --mode series", env).out);
  EXPECT_EQ(s.at("meta").at("truncation"), 30);
  EXPECT_EQ(qgen("table --family genocchi --range n=0..8", env).status, 1);
  {
    std::ofstream out(path);
    out << R"({"bogus": 1})";
  }
  EXPECT_EQ(qgen("genocchi --n 2", env).status, 2);
}

TEST(Cli, VerifySuites) {
  for (const char* suite : {"qcore", "classical", "padic", "limits"}) {
    Proc r = qgen(std::string("verify ") + suite);
    EXPECT_EQ(r.status, 0) << suite << "\n" << r.out;
  }
  const std::string report = "/tmp/qgen_cli_test_report.json";
  qgen("verify qcore --report " + report);
  Json j = Json::parse(slurp(report));
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("properties").size(), 3u);
}

TEST(TableRange, Parse) {
  Range r = Range::parse("h=-2..3");
  EXPECT_EQ(r.name, "h");
  EXPECT_EQ(r.first, -2);
  EXPECT_EQ(r.size(), 6);
  EXPECT_EQ(Range::parse("n=4..1").size(), 0);
  EXPECT_THROW(Range::parse("n=1-3"), UsageError);
}

}  // namespace
}  // namespace qgen::cli
