// Copyright 2026 The Fockrail Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fockrail/json_out.hpp"

using namespace fockrail;
using nlohmann::json;

TEST(Json, SortedKeysAndFloatFormat) {
  json j;
  j["b"] = 1.0;
  j["a"] = 0.1;
  j["c"] = 3;
  j["d"] = std::numeric_limits<double>::quiet_NaN();
  j["e"] = 1e-30;
  EXPECT_EQ(emit_json(j), R"({"a":0.10000000000000001,"b":1.0,"c":3,"d":null,"e":1.0000000000000001e-30})");
}

TEST(Json, NestedArraysAndStrings) {
  json j = {{"x", json::array({1, 2.5, "q\"r"})}, {"y", json::object()}};
  EXPECT_EQ(emit_json(j), R"({"x":[1,2.5,"q\"r"],"y":{}})");
}

TEST(Json, DistributionDocument) {
  SimulationResult r;
  r.distribution.entries[OccupationVector{0, 2}] = 0.5;
  r.distribution.residual = 0.25;
  r.rejected = 0.25;
  r.truncation = 6;
  EXPECT_EQ(emit_json(distribution_json(r)),
            R"({"entries":[{"outcome":[0,2],"probability":0.5}],"kind":"distribution","rejected":0.25,)"
            R"("residual":0.25,"seed":null,"truncation":6,"version":1})");
}

TEST(Json, ElementAndErrors) {
  const std::string e = emit_json(element_json(OccupationVector{1}, OccupationVector{1}, Complex(0.0, -1.0)));
  EXPECT_EQ(e, R"({"im":-1.0,"in":[1],"kind":"element","modulus2":1.0,"out":[1],"re":0.0,"version":1})");
  const ParseError pe(ErrorClass::kSyntax, 3, 7, "bad");
  EXPECT_EQ(emit_json(parse_error_json(pe)),
            R"({"error":{"class":"SYNTAX","column":7,"line":3,"message":"bad"},"kind":"error","version":1})");
}

TEST(Json, GateReport) {
  GateReport g;
  g.gate = "ns";
  g.coefficients = {Complex(0.5, 0.0)};
  g.success_probability = 0.25;
  g.deviations["x"] = 0.0;
  const std::string s = emit_json(gate_report_json(g));
  EXPECT_EQ(s, R"({"coefficients":[[0.5,0.0]],"deviations":{"x":0.0},"gate":"ns","kind":"gate_report",)"
               R"("parameters":{},"success_probability":0.25,"version":1})");
}
