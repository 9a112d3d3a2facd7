// Copyright 2026 The divide2 Authors. All Rights Reserved.
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

#include <random>

#include <doctest.h>

#include "divide2/error.hpp"
#include "divide2/io.hpp"
#include "oracles.hpp"

using namespace divide2;
using divide2::io::Json;

TEST_CASE("BiSeq JSON") {
  BiSeq s(Bit::one, 0, {Bit::zero, Bit::one}, Bit::zero);
  Json j = io::to_json(s);
  CHECK(j.dump() == R"({"left":1,"start":0,"core":[0,1],"right":0})");
  CHECK(io::biseq_from_json(j) == s);
  CHECK_THROWS_WITH(io::biseq_from_json(Json::parse(R"({"left":2,"start":0,"core":[],"right":0})")),
                    doctest::Contains("chi.left"));
  CHECK_THROWS_WITH(io::biseq_from_json(Json::parse(R"({"left":1,"core":[],"right":0})")),
                    doctest::Contains("missing field \"start\""));
}

TEST_CASE("BiSeq JSON round trip keeps canonical values") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Bit> core(rng() % 6);
    for (auto& b : core) b = bit_of(rng() % 2);
    BiSeq s(bit_of(rng() % 2), static_cast<Index>(rng() % 21) - 10, core, bit_of(rng() % 2));
    CHECK(io::biseq_from_json(Json::parse(io::to_json(s).dump())) == s);
  }
}

TEST_CASE("point and chi text forms") {
  CHECK(io::to_json(ZInfPoint::minus_inf()) == "-inf");
  CHECK(io::to_json(ZInfPoint::finite(-3)) == -3);
  CHECK(io::zinf_from_json(Json("+inf")) == ZInfPoint::plus_inf());
  CHECK(io::zinf_from_json(Json(4)) == ZInfPoint::finite(4));
  CHECK_THROWS_AS(io::zinf_from_json(Json("inf?")), InputError);
  CHECK(io::parse_chi("nbar:-2") == embed(ZInfPoint::finite(-2)));
  CHECK(io::parse_chi("+inf") == BiSeq::constant(Bit::one));
  CHECK(io::parse_chi(R"({"left":0,"start":0,"core":[],"right":1})") ==
        BiSeq(Bit::zero, 0, {}, Bit::one));
  CHECK(io::parse_zinf("7") == ZInfPoint::finite(7));
  CHECK_THROWS_AS(io::parse_chi("banana"), InputError);
  CHECK_THROWS_AS(io::parse_chi("nbar:1x"), InputError);
}

TEST_CASE("instance JSON") {
  const char* text = R"({"X": ["b","a"], "Y": ["c","d"],
    "map": [[["a",0],["c",0]], [["a",1],["d",1]], [["b",0],["d",0]], [["b",1],["c",1]]]})";
  FinInstance inst = io::instance_from_json(io::parse_json(text, "inst.json"));
  CHECK(inst.xs() == std::vector<std::string>{"a", "b"});
  FinInstance again = io::instance_from_json(io::to_json(inst));
  CHECK(io::to_json(again) == io::to_json(inst));

  CHECK_THROWS_WITH(io::instance_from_json(Json::parse(R"({"X":["a"],"Y":["c"],"map":[[["a",0]]]})")),
                    doctest::Contains("map[0]"));
  CHECK_THROWS_WITH(io::instance_from_json(Json::parse(R"({"X":["a"],"Y":["c"],"map":[[["a",5],["c",0]]]})")),
                    doctest::Contains("map[0][0][1]"));
  CHECK_THROWS_WITH(io::instance_from_json(Json::parse(R"({"X":[1],"Y":["c"],"map":[]})")),
                    doctest::Contains("X[0]"));
}

TEST_CASE("syntax errors carry line and column") {
  CHECK_THROWS_WITH(io::parse_json("{\n  \"X\": [,]\n}", "f.json"), doctest::Contains("f.json:2:"));
}

TEST_CASE("matching JSON") {
  Matching m{{{"a", "d"}, {"b", "c"}}};
  CHECK(io::to_json(m).dump() == R"({"pairs":[["a","d"],["b","c"]]})");
  CHECK(io::matching_from_json(io::to_json(m)) == m);
  CHECK_THROWS_AS(io::matching_from_json(Json::parse(R"({"pairs":[["a"]]})")), InputError);
}

TEST_CASE("rule JSON") {
  LocalRule rule = io::rule_from_json(Json::parse(R"({"w":0, "table":{"cut:1":1, "cut:0":-1}})"));
  CHECK(rule == LocalRule(0, 1, {-1, 1}));
  CHECK(io::rule_from_json(Json::parse(R"({"w":0,"table":{"allzero":1,"allone":-1}})")) ==
        LocalRule(0, 1, {1, -1}));
  LocalRule wide = io::rule_from_json(
      Json::parse(R"({"w":1,"d":7,"table":{"allzero":3,"cut:0":1,"cut:1":-1,"allone":-3}})"));
  CHECK(wide.bound() == 7);
  CHECK(io::rule_from_json(io::to_json(wide)) == wide);
  CHECK(io::to_json(wide).dump() ==
        R"({"w":1,"d":7,"table":{"allzero":3,"cut:0":1,"cut:1":-1,"allone":-3}})");

  CHECK_THROWS_WITH(io::rule_from_json(Json::parse(R"({"w":0,"table":{"allzero":1}})")),
                    doctest::Contains("missing pattern allone"));
  CHECK_THROWS_WITH(io::rule_from_json(Json::parse(R"({"w":0,"table":{"allzero":1,"cut:0":1,"allone":-1}})")),
                    doctest::Contains("given twice"));
  CHECK_THROWS_WITH(io::rule_from_json(Json::parse(R"({"w":0,"table":{"allzero":2,"allone":-1}})")),
                    doctest::Contains("must be odd"));
  CHECK_THROWS_WITH(io::rule_from_json(Json::parse(R"({"w":0,"table":{"edge":1,"allone":-1}})")),
                    doctest::Contains("unknown window pattern"));
}
