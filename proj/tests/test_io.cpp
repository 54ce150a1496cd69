// Copyright 2026 the zprconv authors
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

#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "zprconv/io.hpp"
#include "zprconv/randomgen.hpp"

using namespace zprconv;

namespace {

std::string msg_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

bool contains_text(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("the documented example parses") {
    std::string text = R"({ "format": "zprconv-1", "p": 2, "r": 2, "n": 2,
                            "generator": [ [[1,1],[0,1]], [[0],[2]] ] })";
    PolyMatrix g = parse_code_text(text);
    CHECK(g.rows() == 2);
    CHECK(g.cols() == 2);
    CHECK(g.ring()->p() == 2);
    CHECK(g.ring()->r() == 2);
    CHECK(g.at(0, 0) == Polynomial(g.ring(), {1, 1}));
    CHECK(g.at(0, 1) == Polynomial(g.ring(), {0, 1}));
    CHECK(g.at(1, 0) == Polynomial::zero(g.ring()));
    CHECK(g.at(1, 1) == Polynomial::constant(g.ring(), 2));
}

TEST_CASE("serialization round-trips") {
    std::mt19937_64 rng(81);
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
        Ring ring = make_ring(p, r);
        for (int t = 0; t < 25; ++t) {
            size_t rows = uniform_below(rng, 4);
            size_t cols = 1 + uniform_below(rng, 4);
            PolyMatrix g = random_poly_matrix(rng, ring, rows, cols, 3);
            PolyMatrix back = parse_code_text(code_file_text(g));
            REQUIRE(back == g);
        }
    }
}

TEST_CASE("serialized text is stable and ordered") {
    Ring z4 = make_ring(2, 2);
    PolyMatrix g(z4, 1, 2);
    g.at(0, 0) = Polynomial(z4, {1, 1});
    std::string text = code_file_text(g);
    CHECK(text == code_file_text(g));
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["format"] == "zprconv-1");
    CHECK(parsed["n"] == 2);
    // zero entries serialize as a single-coefficient list
    CHECK(parsed["generator"][0][1] == nlohmann::json::array({0}));
    CHECK(text.back() == '\n');
}

TEST_CASE("files round-trip on disk") {
    Ring z9 = make_ring(3, 2);
    std::mt19937_64 rng(82);
    PolyMatrix g = random_poly_matrix(rng, z9, 2, 3, 2);
    std::string path = "io_roundtrip_tmp.json";
    write_code_file(path, g);
    PolyMatrix back = read_code_file(path);
    CHECK(back == g);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_code_file("no_such_directory/missing.json"), ParseError);
}

TEST_CASE("parse rejections name the problem") {
    auto parse = [](const std::string& t) { return [t] { parse_code_text(t); }; };

    CHECK(contains_text(msg_of(parse("not json")), "not valid JSON"));
    CHECK(contains_text(msg_of(parse("[1,2]")), "top level"));
    CHECK(contains_text(msg_of(parse(R"({"format":"other","p":2,"r":2,"n":1,"generator":[]})")), "format"));
    CHECK(contains_text(msg_of(parse(R"({"format":"zprconv-1","r":2,"n":1,"generator":[]})")), "p"));
    CHECK(contains_text(msg_of(parse(R"({"format":"zprconv-1","p":4,"r":2,"n":1,"generator":[]})")),
                        "p must be prime, got 4"));
    CHECK(contains_text(msg_of(parse(R"({"format":"zprconv-1","p":2,"r":0,"n":1,"generator":[]})")), "r"));
    CHECK(contains_text(msg_of(parse(R"({"format":"zprconv-1","p":2,"r":2,"n":0,"generator":[]})")), "n"));
    CHECK(contains_text(msg_of(parse(R"({"format":"zprconv-1","p":2,"r":2,"n":1,"generator":5})")), "generator"));

    std::string bad_coeff = R"({"format":"zprconv-1","p":2,"r":2,"n":2,"generator":[[[1],[4]]]})";
    CHECK(contains_text(msg_of(parse(bad_coeff)), "generator[0][1][0]"));
    CHECK(contains_text(msg_of(parse(bad_coeff)), "outside [0, p^r)"));

    std::string negative = R"({"format":"zprconv-1","p":2,"r":2,"n":1,"generator":[[[-1]]]})";
    CHECK(contains_text(msg_of(parse(negative)), "generator[0][0]"));

    std::string fractional = R"({"format":"zprconv-1","p":2,"r":2,"n":1,"generator":[[[1.5]]]})";
    CHECK(!msg_of(parse(fractional)).empty());

    std::string ragged = R"({"format":"zprconv-1","p":2,"r":2,"n":2,"generator":[[[1]]]})";
    CHECK(contains_text(msg_of(parse(ragged)), "generator[0]"));

    std::string row_not_array = R"({"format":"zprconv-1","p":2,"r":2,"n":1,"generator":[3]})";
    CHECK(contains_text(msg_of(parse(row_not_array)), "generator[0]"));
}

TEST_CASE("reports serialize with their items") {
    VerificationReport rep;
    rep.seed = 9;
    rep.items.push_back({"first law", true, true, "0", "0"});
    rep.items.push_back({"second law", false, true, "1", "2"});
    std::string text = report_json_text(rep);
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["seed"] == 9);
    CHECK(parsed["all_pass"] == false);
    REQUIRE(parsed["items"].size() == 2);
    CHECK(parsed["items"][0]["name"] == "first law");
    CHECK(parsed["items"][1]["pass"] == false);
    CHECK(parsed["items"][1]["expected"] == "1");
    CHECK(parsed["items"][1]["actual"] == "2");
}
