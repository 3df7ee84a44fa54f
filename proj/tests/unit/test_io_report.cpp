//  Copyright 2026 The Quantopia Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "quantopia/io.hpp"
#include "quantopia/report.hpp"
#include "quantopia/sober.hpp"

using namespace quantopia;

namespace {

const std::string kData = QUANTOPIA_TEST_DATA;

}  // namespace

TEST_CASE("quantale files") {
  const QuantalePtr q = resolve_quantale(kData + "/l3.json");
  CHECK(q->label() == "l3");
  CHECK(q->table().mul == mv_chain(3)->table().mul);
  const Json j = quantale_to_json(*mv_chain(3));
  CHECK(quantale_table_from_json(j).elements == mv_chain(3)->names());
  CHECK(resolve_quantale("godel4")->size() == 4);
  CHECK_THROWS_AS(resolve_quantale(kData + "/missing.json"), ParseError);
}

TEST_CASE("numeric identifiers and 0/1 order entries") {
  const Json j = Json::parse(R"({"elements": [0, 1], "leq": [[1, 1], [0, 1]],
                                 "mul": [[0, 0], [0, 1]], "unit": 1})");
  const QuantaleTable t = quantale_table_from_json(j);
  CHECK(validate_quantale(t).ok());
  CHECK(t.unit == "1");
}

TEST_CASE("malformed inputs are structural errors") {
  CHECK_THROWS_AS(quantale_table_from_json(Json::parse(R"({"elements": ["a"]})")), StructuralError);
  CHECK_THROWS_AS(tnorm_from_json(Json::parse(R"({"pieces": [{"kind": "weird", "lo": 0, "hi": 1}]})")),
                  StructuralError);
  CHECK_THROWS_AS(tnorm_from_json(Json::parse(R"({"pieces": [{"kind": "product", "lo": 0.5, "hi": 0.2}]})")),
                  StructuralError);
  const auto b = boolean_quantale();
  CHECK_THROWS_AS(qfun_from_json(*b, {"x", "y"}, Json::parse(R"({"x": 1})")), StructuralError);
}

TEST_CASE("round trips") {
  const TNorm t = TNorm({{PieceKind::lukasiewicz, 0.0, 0.5}, {PieceKind::product, 0.5, 1.0}});
  CHECK(tnorm_from_json(tnorm_to_json(t)) == t);
  const QOrderedSet x = alpha_L(mv_chain(3));
  const QOrderedSet y = qorder_from_json(qorder_to_json(x));
  CHECK(y.matrix() == x.matrix());
  CHECK(y.carrier() == x.carrier());
  const QTopSpace s = sierpinski(godel_chain(3));
  const QTopSpace s2 = space_from_json(space_to_json(s));
  CHECK(s2.opens == s.opens);
  const auto b = boolean_quantale();
  const QFun f = qfun_from_json(*b, {"x", "y"}, Json::parse(R"({"values": {"y": "1", "x": "0"}})"));
  CHECK(f == QFun({0, 1}));
  CHECK(qfun_to_json(*b, {"x", "y"}, f).dump() == R"({"x":"0","y":"1"})");
}

TEST_CASE("spaces from a subbasis") {
  const Json j = Json::parse(R"({"quantale": "godel3", "carrier": ["0", "1/2", "1"],
                                 "subbasis": [["0", "1/2", "1"]]})");
  const QTopSpace s = space_from_json(j);
  CHECK(s.opens == sierpinski(godel_chain(3)).opens);
  CHECK_THROWS_AS(space_from_json(Json::parse(R"({"quantale": "bool", "carrier": ["x"]})")),
                  StructuralError);
}

TEST_CASE("digests are stable") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(digest(Json::parse(R"({"a": 1})")) == digest(Json::parse(R"({"a":1})")));
}

TEST_CASE("reports") {
  RunReport r;
  r.command = "demo";
  r.add("first", true);
  CheckResult& c = r.add("second", false);
  CHECK(c.reason == "check failed");
  CHECK_FALSE(r.pass());
  const Json j = r.to_json();
  CHECK(j["overall"] == "fail");
  CHECK(j["checks"][1]["verdict"] == "fail");
  CHECK_FALSE(j["checks"][0].contains("runtime_ms"));
  CHECK(r.to_json(true)["checks"][0].contains("runtime_ms"));
  const std::string text = r.to_text();
  CHECK(text.find("FAIL  second") != std::string::npos);
  CHECK(text.find("overall: fail") != std::string::npos);
  RunReport ok;
  ok.add("only", true);
  CHECK(ok.pass());
  CHECK(ok.to_json()["overall"] == "pass");
}
