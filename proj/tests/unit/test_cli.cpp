// Copyright 2026 The Frobenia Authors
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
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

#include "frobenia/poly.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Run {
    int exit_code = -1;
    std::string out;
    Json json() const { return Json::parse(out); }
};

/// Runs the CLI inside the fixture directory; stderr is discarded.
Run run(const std::string& args)
{
    const std::string cmd = std::string("cd '") + FROBENIA_TEST_DATA + "' && '" + FROBENIA_EXE + "' " + args +
                            " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("classify an ev-sum of three points")
{
    const auto r = run("classify Q3.json ev_sum3.json --max-n 5");
    CHECK(r.exit_code == 0);
    const auto j = r.json();
    CHECK(j["command"] == "classify");
    CHECK(j["status"] == "ok");
    CHECK(j["exact"] == true);
    CHECK(j["result"]["kind"] == "n_hom");
    CHECK(j["result"]["n"] == 3);
    CHECK(j["inputs"]["files"].size() == 2);
}

TEST_CASE("verify-det on ev_1 + ev_2")
{
    const auto r = run("verify-det Q2.json ev_sum2.json -n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.json()["status"] == "ok");
}

TEST_CASE("hankel on ev_1 - ev_2")
{
    const auto r = run("hankel Q2.json ev_diff.json -p 1 -q 1 --kmax 4");
    CHECK(r.exit_code == 0);
    CHECK(r.json()["result"]["status"] == "certified_up_to_k_max");
}

TEST_CASE("refutations carry re-parseable witnesses")
{
    const auto r = run("hankel Q.json half.json -p 1 -q 0 --kmax 3");
    CHECK(r.exit_code == 1);
    const auto j = r.json();
    CHECK(j["status"] == "refuted");
    const auto& w = j["result"]["witness"];
    REQUIRE(w.is_array());
    REQUIRE_FALSE(w.empty());
    const auto p = frobenia::parse_poly(w[0].get<std::string>());
    CHECK_FALSE(p.is_zero());

    const auto c = run("classify Q3.json ev_signed.json --max-n 4");
    CHECK(c.exit_code == 1);
    const auto cw = c.json()["result"]["witness"];
    REQUIRE(cw.is_array());
    CHECK_FALSE(frobenia::parse_poly(cw[0].get<std::string>()).is_zero());

    const auto bad = run("algcheck bad_unit.json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.json()["status"] == "refuted");
}

TEST_CASE("errors and usage")
{
    CHECK(run("frobnicate Q.json").exit_code == 2);
    CHECK(run("classify Q3.json ev_sum3.json --bogus").exit_code == 2);
    CHECK(run("classify Q3.json ev_sum3.json").exit_code == 2);
    CHECK(run("classify Q3.json missing.json --max-n 2").exit_code == 2);
    CHECK(run("--help").exit_code == 0);

    const auto r = run("algcheck bad_rational.json");
    CHECK(r.exit_code == 2);
    const auto j = r.json();
    CHECK(j["status"] == "error");
    CHECK(j["result"]["error"].get<std::string>().find("#/unit/0") != std::string::npos);

    const auto shape = run("charfn Q2.json bad_shape.json");
    CHECK(shape.exit_code == 2);
    CHECK(shape.json()["result"]["error"].get<std::string>().find("#/matrix") != std::string::npos);
}

TEST_CASE("commands produce JSON reports")
{
    const char* commands[] = {
        "algcheck dual.json",
        "connected dual.json",
        "charfn Q2.json generic_map.json --order 4",
        "charfn Q2.json generic_map.json --order 3 --at 1,2",
        "frobenius Q2.json ev_sum2.json --k 2",
        "frobenius Q2.json ev_sum2.json --k 2 --arg 1,0 --arg 0,1",
        "classify Q3.json ev_signed.json --pq 3 2",
        "ber Q2.json ev_sum2.json --max-n 3",
        "verify-ber Q2.json ev_sum2.json",
        "sympower Q2.json -n 2",
        "lift Q2.json ev_sum2.json -n 2",
        "verify-det dual.json dual_frob.json -n 2",
        "sympq Q2.json -p 1 -q 1",
        "sympq-oracle -m 2 -p 1 -q 1 --compare",
    };
    for (const char* c : commands) {
        CAPTURE(c);
        const auto r = run(c);
        CHECK(r.exit_code == 0);
        CHECK(r.json()["status"] == "ok");
    }
}

TEST_CASE("lift then restrict recovers the map")
{
    const auto dir = std::filesystem::temp_directory_path() / "frobenia_cli_test";
    std::filesystem::create_directories(dir);
    const auto lifted = dir / "lift.json";
    REQUIRE(run("lift Q2.json ev_sum2.json -n 2 -o '" + lifted.string() + "'").exit_code == 0);
    const auto r = run("restrict Q2.json '" + lifted.string() + "' -n 2");
    CHECK(r.exit_code == 0);
    const auto lifted_json = Json::parse(run("lift Q2.json ev_sum2.json -n 2").out);
    CHECK(lifted_json["result"]["map"]["matrix"] == Json::parse(R"([["0","1","0"]])"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("repeated runs are byte-identical")
{
    const auto a = run("--seed 0 connected Q3.json --trials 8");
    const auto b = run("--seed 0 connected Q3.json --trials 8");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}
