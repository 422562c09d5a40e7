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

#include <doctest.h>

#include "io.hpp"
#include "report.hpp"
#include "support.hpp"

using namespace frobenia;
using namespace frobenia::io;

namespace {

const std::filesystem::path data_dir = FROBENIA_TEST_DATA;

const std::vector<std::string> algebra_files{"Q.json", "Q2.json", "Q3.json", "dual.json", "dual_explicit.json"};

// Map file and the algebra its domain defaults to.
const std::vector<std::pair<std::string, std::string>> map_files{
    {"ev_sum3.json", "Q3.json"}, {"ev_sum2.json", "Q2.json"},       {"ev_diff.json", "Q2.json"},
    {"ev_signed.json", "Q3.json"}, {"half.json", "Q.json"},          {"dual_frob.json", "dual.json"},
    {"generic_map.json", "Q2.json"}};

template <typename F>
std::string io_error_location(F&& f)
{
    try {
        f();
    } catch (const IoError& e) {
        return e.location();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("presets")
{
    CHECK(load_algebra(data_dir / "Q2.json")->same_structure(*function_algebra(2)));
    CHECK(load_algebra(data_dir / "dual.json")->same_structure(*quotient_algebra(test::monomial_modulus(2))));
    CHECK(load_algebra(data_dir / "dual.json")->same_structure(*load_algebra(data_dir / "dual_explicit.json")));
    const Json q = Json::parse(R"({"preset": "quotient", "poly": ["-1", 0, 1]})");
    CHECK(parse_algebra(q, "inline")->dim() == 2);
}

TEST_CASE("rationals")
{
    CHECK(parse_rational_json(Json("-6/4"), "x") == Rational(-3, 2));
    CHECK(parse_rational_json(Json(7), "x") == Rational(7));
    CHECK(rational_json(Rational(-3, 2)) == Json("-3/2"));
    CHECK_THROWS_AS(parse_rational_json(Json(0.5), "x"), IoError);
    CHECK_THROWS_AS(parse_rational_json(Json("1/0"), "x"), IoError);
}

TEST_CASE("errors name their location")
{
    CHECK(io_error_location([] { load_algebra(data_dir / "bad_rational.json"); }).ends_with("#/unit/0"));
    CHECK(io_error_location([] { load_map(data_dir / "bad_shape.json", load_algebra(data_dir / "Q2.json")); })
              .ends_with("#/matrix"));
    CHECK(io_error_location([] { load_algebra(data_dir / "bad_unit.json"); }).ends_with("bad_unit.json#"));
    CHECK(io_error_location([] { load_algebra(data_dir / "bad_unit.json", false); }) == "<no error>");
    CHECK(io_error_location([] { load_algebra(data_dir / "missing.json"); }).ends_with("missing.json"));
    CHECK(io_error_location([] {
              parse_algebra(Json::parse(R"({"preset": "functions"})"), "inline");
          }).starts_with("inline"));
    CHECK(io_error_location([] {
              parse_map(Json::parse(R"({"codomain": "Q.json", "matrix": [["1"]]})"), "m", data_dir, nullptr);
          }).starts_with("m"));
}

TEST_CASE("round trip of every fixture")
{
    for (const auto& f : algebra_files) {
        CAPTURE(f);
        const auto a = load_algebra(data_dir / f);
        const auto again = parse_algebra(algebra_json(*a), "roundtrip");
        CHECK(again->same_structure(*a));
        CHECK(algebra_json(*again) == algebra_json(*a));
    }
    for (const auto& [f, dom] : map_files) {
        CAPTURE(f);
        const auto m = load_map(data_dir / f, load_algebra(data_dir / dom));
        const auto again = parse_map(map_json(m), "roundtrip", data_dir, nullptr);
        CHECK(again.matrix() == m.matrix());
        CHECK(again.domain()->same_structure(*m.domain()));
        CHECK(again.codomain()->same_structure(*m.codomain()));
        CHECK(map_json(again) == map_json(m));
    }
}

TEST_CASE("elements")
{
    const auto a = function_algebra(3);
    CHECK(parse_element(a, "1,-2/3,0", "--at") == Element(a, {1, Rational(-2, 3), 0}));
    CHECK_THROWS_AS(parse_element(a, "1,2", "--at"), IoError);
    CHECK_THROWS_AS(parse_element(a, "1,x,2", "--at"), IoError);
    SymbolScope scope;
    const auto g = scope.generic(a, "a");
    const Json j = element_json(g);
    REQUIRE(j.size() == 3);
    // Witness strings re-parse to the same polynomial.
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(parse_poly(j[i].get<std::string>()) == g[i]);
}

TEST_CASE("reports")
{
    cli::Report r;
    r.command = "algcheck";
    r.add_file(data_dir / "Q.json");
    r.add_parameter("k", 2);
    CHECK(r.to_json()["status"] == "ok");
    r.refute();
    CHECK(r.to_json()["status"] == "refuted");
    CHECK(cli::exit_code(r.status) == 1);
    r.status = cli::Status::error;
    r.refute();
    CHECK(cli::exit_code(r.status) == 2);
    CHECK(r.to_json()["exact"] == true);
    CHECK(cli::sha256_file(data_dir / "Q.json").size() == 64);
    CHECK(cli::exit_code(cli::Status::ok) == 0);
}
