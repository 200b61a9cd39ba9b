// Copyright 2026 The oddrank authors.
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

#include "oddrank/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace oddrank;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("rank command") {
  SUBCASE("GHZ5 over qubits 1,2,3") {
    const auto doc = run_json({"rank", "--state", "GHZ", "--n", "5",
                               "--qubits", "1,2,3", "--format", "structured"});
    CHECK(doc["n"] == 5);
    CHECK(doc["convention"] == "qubit1=MSB");
    CHECK(doc["mode"] == "rational");
    REQUIRE(doc["qubits"].size() == 3);
    for (const auto& row : doc["qubits"]) {
      CHECK(row["rank"] == 2);
      CHECK(row["boundary"] == false);
    }
  }
  SUBCASE("W3 has all ranks 1") {
    const auto doc =
        run_json({"rank", "--state", "W", "--n", "3", "--format", "structured"});
    REQUIRE(doc["qubits"].size() == 3);
    for (const auto& row : doc["qubits"]) CHECK(row["rank"] == 1);
  }
  SUBCASE("text output mentions the tolerance") {
    const auto r = run({"rank", "--state", "W", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rank_epsilon") != std::string::npos);
  }
  SUBCASE("out-of-range qubit is a usage error") {
    const auto r = run({"rank", "--state", "W", "--n", "3", "--qubits", "4"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
  }
  SUBCASE("missing input is a usage error") {
    CHECK(run({"rank"}).code == 2);
  }
  SUBCASE("state and file together are rejected") {
    const auto r =
        run({"rank", "--state", "GHZ", "--n", "3", "--file", "x.json"});
    CHECK(r.code == 2);
  }
}

TEST_CASE("even-n state files are rejected with the odd-n message") {
  const std::string path = "cli_even_state.json";
  {
    std::ofstream f(path);
    f << R"({"format":"oddrank-state","n":4,"mode":"float","amplitudes":[)";
    for (int i = 0; i < 16; ++i) f << (i ? "," : "") << "[1,0]";
    f << "]}";
  }
  const auto r = run({"rank", "--file", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("odd") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("classify command") {
  SUBCASE("Phi2 lands in F[0,0,0]^(1,2,3)") {
    const auto r = run({"classify", "--state", "Phi2", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F[0,0,0]^(1,2,3)") != std::string::npos);
  }
  SUBCASE("Dicke |2,5> over qubits 1,2") {
    const auto r = run({"classify", "--state", "Dicke", "--n", "5", "--l", "2",
                        "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F[1,1]^(1,2)") != std::string::npos);
  }
  SUBCASE("|00000> over qubits 1,2") {
    const auto r = run({"classify", "--state", "zero", "--n", "5", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F[0,0]^(1,2)") != std::string::npos);
  }
  SUBCASE("structured record is self-describing") {
    const auto doc = run_json({"classify", "--state", "Phi4", "--k", "3",
                               "--format", "structured"});
    CHECK(doc["family"] == "F[1,1,1]^(1,2,3)");
    CHECK(doc["mode"] == "float");
    CHECK(doc["convention"] == "qubit1=MSB");
    CHECK(doc["tolerance"]["rank_epsilon"] == 1e-10);
  }
}

TEST_CASE("verify command") {
  SUBCASE("small seeded run passes") {
    const auto doc = run_json({"verify", "--trials", "10", "--n", "3,5",
                               "--seed", "42", "--format", "structured"});
    CHECK(doc["pass"] == true);
    CHECK(doc["seed"] == 42);
    CHECK(doc["covariance"]["rank_mismatches"] == 0);
  }
  SUBCASE("zero trials pass trivially") {
    const auto r = run({"verify", "--trials", "0"});
    CHECK(r.code == 0);
  }
  SUBCASE("the corrupted covariance hook fails with exit 1") {
    const auto r = run({"verify", "--trials", "5", "--n", "3",
                        "--corrupt-covariance"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
  }
  SUBCASE("even n is a usage error") {
    CHECK(run({"verify", "--trials", "5", "--n", "4"}).code == 2);
  }
}

TEST_CASE("tables command") {
  for (const std::string id : {"1", "2", "3", "4", "5"}) {
    const auto r = run({"tables", "--table", id});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  const auto doc = run_json({"tables", "--table", "4", "--format",
                             "structured"});
  CHECK(doc["all_pass"] == true);
  CHECK(doc["tables"][0]["rows"].size() == 6);

  CHECK(run({"tables", "--table", "9"}).code == 2);
}

TEST_CASE("gen command round-trips through rank") {
  const std::string path = "cli_gen_state.json";
  const auto gen = run({"gen", "--state", "table5:02", "--out", path});
  CHECK(gen.code == 0);
  const auto doc = run_json(
      {"rank", "--file", path, "--qubits", "1,2", "--format", "structured"});
  CHECK(doc["qubits"][0]["rank"] == 0);
  CHECK(doc["qubits"][1]["rank"] == 2);
  std::remove(path.c_str());

  SUBCASE("gen requires a named state") {
    CHECK(run({"gen", "--out", "x.json"}).code == 2);
  }
  SUBCASE("gen to stdout") {
    const auto r = run({"gen", "--state", "GHZ", "--n", "3", "--out", "-"});
    CHECK(r.code == 0);
    CHECK(r.out.find("oddrank-state") != std::string::npos);
  }
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"rank", "--help"}).code == 0);
  CHECK(run({"rank", "--state", "GHZ", "--n", "3", "--format", "yaml"}).code ==
        2);
}
