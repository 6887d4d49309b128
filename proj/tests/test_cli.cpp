// Copyright 2026 The divperiod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "divper/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "divperiod");
  std::ostringstream out, err;
  const int code = divper::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("period") {
  const Result r = invoke({"period", "60"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k = 5") != std::string::npos);
  CHECK(r.out.find("60 -> 12 -> 6 -> 4 -> 3 -> 2") != std::string::npos);

  const Result j = invoke({"period", "60", "--format", "json"});
  const json doc = json::parse(j.out);
  CHECK(doc["k"] == 5);
  CHECK(doc["trajectory"] == json::array({"60", "12", "6", "4", "3", "2"}));

  const Result one = invoke({"period", "1"});
  CHECK(one.code == 1);
  CHECK(one.err.find("period of 1 is undefined") != std::string::npos);

  const Result big = invoke({"period", "2^6*3^4*5^2*7^2*11*13*17*19"});
  CHECK(big.code == 0);
  CHECK(big.out.find("k = 7") != std::string::npos);
}

TEST_CASE("decimal input above 64 bits is refused with a pointer to factored form") {
  const Result r = invoke({"construct", "18446744073709551616"});
  CHECK(r.code == 1);
  CHECK(r.err.find("factored form") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"period"}).code == 2);
  CHECK(invoke({"table"}).code == 2);
  CHECK(invoke({"first", "--limit", "10", "--bogus"}).code == 2);
  CHECK(invoke({"first", "--limit", "10", "--format", "xml"}).code == 2);
  CHECK(invoke({"hcn"}).code == 2);
  const Result help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("chain") != std::string::npos);
}

TEST_CASE("construct, naive and min-divisors") {
  const json c = json::parse(invoke({"construct", "5040", "--format", "json"}).out);
  CHECK(c["factored"] == "2^6*3^4*5^2*7^2*11*13*17*19");
  CHECK(c["decimal"] == "293318625600");
  CHECK(c["digits"] == 12);
  CHECK(c["divisor_count"] == "5040");
  CHECK(c["divisor_count_verified"] == true);

  const json n = json::parse(invoke({"naive", "12", "--format", "json"}).out);
  CHECK(n["decimal"] == "72");

  const json m = json::parse(invoke({"min-divisors", "16", "--format", "json"}).out);
  CHECK(m["decimal"] == "120");
  CHECK(json::parse(invoke({"construct", "16", "--format", "json"}).out)["decimal"] == "210");

  CHECK(invoke({"construct", "1"}).code == 1);
  CHECK(invoke({"min-divisors", "0"}).code == 1);
  const Result csv = invoke({"construct", "12", "--format", "csv"});
  CHECK(csv.out == "factored,decimal,digits,divisor_count\n2^2*3*5,60,2,12\n");
}

TEST_CASE("table, first, hist and plot") {
  CHECK(invoke({"table", "--limit", "5"}).out == "n,d,k\n2,2,1\n3,2,1\n4,3,2\n5,2,1\n");
  CHECK(invoke({"first", "--limit", "6000", "--format", "csv"}).out == "k,n\n1,2\n2,4\n3,6\n4,12\n5,60\n6,5040\n");
  CHECK(invoke({"hist", "--from", "2", "--to", "12", "--format", "csv"}).out == "k,count\n1,5\n2,2\n3,3\n4,1\n");
  const std::string plot = invoke({"plot", "--from", "2", "--to", "6"}).out;
  CHECK(plot == "n,k\n2,1\n3,1\n4,2\n5,1\n6,3\n");
  CHECK(invoke({"hist", "--from", "1", "--to", "12"}).code == 1);
  CHECK(invoke({"table", "--limit", "1"}).code == 1);
}

TEST_CASE("chain") {
  const json doc = json::parse(invoke({"chain", "--max-k", "7", "--bound", "100000", "--format", "json"}).out);
  REQUIRE(doc.size() == 7);
  const json& last = doc.back();
  CHECK(last["k"] == 7);
  CHECK(last["factored"] == "2^6*3^4*5^2*7^2*11*13*17*19");
  CHECK(last["decimal"] == "293318625600");
  CHECK(last["digits"] == 12);
  CHECK(last["verification"] == "oracle-verified-up-to-bound(100000)");
  CHECK(last["canonical_agrees"] == true);
  CHECK(doc[0]["verification"] == "sieve-verified");
}

TEST_CASE("verify-theorem1") {
  const json doc =
      json::parse(invoke({"verify-theorem1", "--limit", "20", "--sieve-limit", "100000", "--format", "json"}).out);
  CHECK(doc["oracle_sieve_mismatches"] == 0);
  bool saw16 = false;
  for (const auto& row : doc["disagreements"]) {
    if (row["t"] == 16) {
      saw16 = true;
      CHECK(row["canonical"] == "2*3*5*7");
      CHECK(row["oracle"] == "2^3*3*5");
      CHECK(row["sieve"] == 120);
      CHECK(row["status"] == "canonical-not-minimal");
    }
  }
  CHECK(saw16);
}

TEST_CASE("hcn, conjecture, wigert, increment") {
  const json list = json::parse(invoke({"hcn", "--log10-limit", "2.1", "--format", "json"}).out);
  CHECK(list.size() == 10);
  CHECK(list.back()["n"] == "120");
  const json check = json::parse(invoke({"hcn", "--check", "2^4*3^2*5*7", "--format", "json"}).out);
  CHECK(check["is_hcn"] == true);
  CHECK(invoke({"hcn", "--check", "2^80"}).code == 1);

  const std::string conj = invoke({"conjecture", "--max-k", "6", "--bound", "10000", "--format", "csv"}).out;
  CHECK(conj.rfind("k,n_decimal,ln_n,ratio,is_hcn\n", 0) == 0);
  CHECK(conj.find("\n6,5040,") != std::string::npos);

  const json w = json::parse(
      invoke({"wigert", "--from", "3", "--to", "100", "--epsilon", "0.1", "--n0", "50", "--format", "json"}).out);
  CHECK(w["max"]["n"].get<int>() >= 3);
  CHECK(w["small_n_exceedances"].get<int>() > 0);
  CHECK(invoke({"wigert", "--from", "2", "--to", "100"}).code == 1);

  const json inc = json::parse(invoke({"increment", "12", "--format", "json"}).out);
  CHECK(inc["n"] == "12");
  CHECK(inc["hypothesis_holds"] == false);
  CHECK(inc["bound_holds"] == false);
  CHECK(inc["bound"].get<double>() == doctest::Approx(1.09));
}

TEST_CASE("every subcommand emits parseable json") {
  const std::vector<std::vector<std::string>> calls = {
      {"period", "12"},
      {"table", "--limit", "20"},
      {"first", "--limit", "100"},
      {"hist", "--from", "2", "--to", "100"},
      {"construct", "60"},
      {"naive", "60"},
      {"min-divisors", "60"},
      {"chain", "--max-k", "5", "--bound", "1000"},
      {"verify-theorem1", "--limit", "10", "--sieve-limit", "1000"},
      {"hcn", "--log10-limit", "3"},
      {"hcn", "--check", "60"},
      {"conjecture", "--max-k", "5", "--bound", "1000"},
      {"wigert", "--from", "3", "--to", "1000"},
      {"increment", "60"},
      {"plot", "--from", "2", "--to", "50"},
  };
  for (auto args : calls) {
    args.push_back("--format");
    args.push_back("json");
    const Result r = invoke(args);
    INFO(args.front());
    REQUIRE(r.code == 0);
    json parsed;
    CHECK_NOTHROW(parsed = json::parse(r.out));
    CHECK_FALSE(parsed.is_null());
  }
}

TEST_CASE("output is deterministic across runs and worker counts") {
  const auto a = invoke({"table", "--limit", "20000", "--threads", "1"}).out;
  const auto b = invoke({"table", "--limit", "20000", "--threads", "4"}).out;
  CHECK(a == b);
  CHECK(invoke({"chain", "--max-k", "7", "--bound", "20000"}).out ==
        invoke({"chain", "--max-k", "7", "--bound", "20000", "--threads", "3"}).out);
}

TEST_CASE("--out writes to a file") {
  const std::string path = "divperiod_cli_test_out.csv";
  const Result r = invoke({"plot", "--from", "2", "--to", "4", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "n,k\n2,1\n3,1\n4,2\n");
  std::remove(path.c_str());
}
