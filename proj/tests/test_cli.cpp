// Copyright 2026 The sl2coh Authors
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

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"
#include "sl2coh/cli.hpp"
#include "sl2coh/report.hpp"
#include "sl2coh/verify.hpp"

using namespace sl2coh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("ranges") {
    CHECK(parse_range("5") == std::pair<std::int64_t, std::int64_t>{5, 5});
    CHECK(parse_range("0..12") == std::pair<std::int64_t, std::int64_t>{0, 12});
    CHECK_THROWS(parse_range("9..3"));
    CHECK_THROWS(parse_range("x"));
    CHECK_THROWS(parse_range("1..."));
  }

  TEST_CASE("nsol") {
    const auto r = run({"nsol", "--m", "6", "--n", "4", "--p", "3"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[1].substr(l[1].rfind(',') + 1) == "1");
    CHECK(run({"nsol", "--m", "12", "--n", "5", "--p", "3", "--method", "closed"}).code == 2);
    CHECK(run({"nsol", "--m", "12", "--n", "1", "--p", "4"}).code == 2);
    CHECK(run({"nsol", "--m", "12", "--p", "3"}).code == 2);
    CHECK(run({"nsol", "--m", "138", "--n", "8", "--p", "3", "--list"}).code == 2);
    const auto listed = run({"nsol", "--m", "138", "--n", "8", "--p", "3", "--list", "--method", "brute"});
    CHECK(listed.code == 0);
    CHECK(listed.out.find("0;2;0;0;0,0;1;1;1;1") != std::string::npos);
  }

  TEST_CASE("methods agree over a range") {
    std::string outs[4];
    int k = 0;
    for (const char* method : {"brute", "recursive", "sum", "closed"}) {
      const auto r = run({"nsol", "--m", "0..60", "--n", "1..4", "--p", "5", "--method", method});
      REQUIRE(r.code == 0);
      outs[k++] = r.out;
    }
    CHECK(outs[0] == outs[1]);
    CHECK(outs[0] == outs[2]);
    CHECK(outs[0] == outs[3]);
  }

  TEST_CASE("p = 2 table against the naive count") {
    const auto r = run({"weyl", "--p", "2", "--n", "0..4", "--m", "0..32", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto rows = nlohmann::json::parse(r.out);
    CHECK(rows.size() == 5 * 33);
    for (const auto& row : rows) {
      const auto m = row.at("m").get<std::uint64_t>(), n = row.at("n").get<std::uint64_t>();
      CHECK(row.at("dim").get<std::uint64_t>() == (m % 2 ? 0 : oracle::p2_system(m + 2, n + 1)));
    }
  }

  TEST_CASE("csv and json carry the same rows") {
    const std::vector<std::string> base = {"ext", "--p", "3", "--n", "0..3", "--m1", "20..40", "--m2", "0..5"};
    auto csv_args = base, json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto csv = run(csv_args), js = run(json_args);
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    const auto l = lines(csv.out);
    const auto rows = nlohmann::json::parse(js.out);
    REQUIRE(l.size() == rows.size() + 1);
    CHECK(l[0] == "p,n,m1,m2,dim");
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& o = rows[k];
      std::string expect;
      for (const char* key : {"p", "n", "m1", "m2", "dim"}) expect += (expect.empty() ? "" : ",") + o.at(key).dump();
      CHECK(l[k + 1] == expect);
    }
  }

  TEST_CASE("usage errors") {
    CHECK(run({"ext", "--p", "3", "--n", "1", "--m1", "3", "--m2", "9"}).code == 2);
    CHECK(run({"ext", "--p", "2", "--n", "1", "--m1", "9", "--m2", "3"}).code == 2);
    CHECK(run({"specht", "--p", "5", "--n", "7", "--lambda1", "3", "--lambda2", "1"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"finite", "--p", "3", "--n", "0", "--f", "1,3"}).code == 2);
    CHECK(run({"weyl", "--p", "3", "--n", "0", "--m", "0", "--threads", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("verify exit codes") {
    const auto ok = run({"verify", "oracle", "--scale", "quick"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find(",fail,") == std::string::npos);
    CheckResult bad;
    bad.suite = "x";
    bad.check = "y";
    bad.expect(false, [] { return std::string("fabricated"); });
    CHECK(verify_exit_code({bad}) == 1);
    bad.informational = true;
    CHECK(verify_exit_code({bad}) == 0);
    CHECK(verify_exit_code({}) == 0);
  }

  TEST_CASE("threads do not change output") {
    const std::vector<std::string> base = {"ext", "--p", "5", "--n", "0..4", "--m1", "0..200", "--m2", "0..30"};
    auto a = base, b = base;
    a.insert(a.end(), {"--threads", "1"});
    b.insert(b.end(), {"--threads", "6"});
    CHECK(run(a).out == run(b).out);
  }

  TEST_CASE("other commands") {
    CHECK(run({"weyl", "--p", "3", "--n", "1", "--m", "4"}).out == "p,n,m,dim\n3,1,4,1\n");
    CHECK(run({"finite", "--p", "3", "--n", "0", "--f", "0,0"}).code == 0);
    CHECK(run({"specht", "--p", "5", "--n", "2", "--lambda1", "3", "--lambda2", "1"}).code == 0);
    CHECK(run({"bcoh", "--p", "3", "--n", "0..3", "--m", "0..10"}).code == 0);
    CHECK(run({"ext3", "--p", "3", "--m1", "0..30", "--m2", "0..30"}).code == 0);
    const auto probe = run({"probe-stabilization", "--p", "3", "--n", "1", "--m", "4", "--s-min", "2", "--s-max", "4"});
    CHECK(probe.code == 0);
    CHECK(lines(probe.out).size() == 4);
  }

  TEST_CASE("report writers") {
    RunReport rep;
    rep.rows.push_back({{"a", std::int64_t{-1}}, {"b", std::string("x,y")}});
    rep.rows.push_back({{"a", std::uint64_t{2}}, {"c", std::string("q\"")}});
    std::ostringstream csv, js;
    write_csv(rep, csv);
    write_json(rep, js);
    CHECK(csv.str() == "a,b,c\n-1,\"x,y\",\n2,,\"q\"\"\"\n");
    const auto parsed = nlohmann::json::parse(js.str());
    CHECK(parsed[0]["b"] == "x,y");
    CHECK(parsed[1]["a"] == 2);
    CHECK_FALSE(parsed[1].contains("b"));
  }
}
