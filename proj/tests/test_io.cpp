// Copyright 2026 The weylmaps Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "weyl/errors.hpp"
#include "weyl/io.hpp"
#include "weyl/kernels.hpp"

using namespace weyl;
using io::Json;

TEST_CASE("subgroups and element sets") {
  const auto g = make_subgroup(4, 1, 1, 2);
  const Json j = io::to_json(g);
  CHECK(j.dump() == R"({"d":4,"m":1,"w":1,"n":2})");
  CHECK(io::subgroup_from_json(j) == g);
  CHECK_THROWS_AS(io::subgroup_from_json(Json::parse(R"({"d":4,"m":1,"w":1,"n":3})")), InvalidArgument);
  CHECK_THROWS_AS(io::subgroup_from_json(Json::parse(R"({"d":4,"m":1,"w":1})")), InvalidArgument);
  const auto e = subgroup_elements(make_subgroup(3, 1, 0, 3));
  CHECK(io::elements_to_json(e).dump() == "[[0,0],[1,0],[2,0]]");
}

TEST_CASE("matrices") {
  CMatrix a(2, 2);
  a << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(0.5, 0.25);
  const Json j = io::to_json(a);
  CHECK(j.dump() == "[[[1.0,2.0],[0.0,-1.0]],[[3.0,0.0],[0.5,0.25]]]");
  CHECK(max_abs(io::matrix_from_json(j) - a) == 0.0);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[[[1,0]],[[1,0],[2,0]]]")), InvalidArgument);
}

TEST_CASE("Weyl map specs") {
  WeylMapSpec s{2, {0.7, 0.0, 0.3, 0.0}};
  const Json j = io::to_json(s);
  CHECK(j.dump() == R"({"d":2,"weights":[{"i":0,"j":0,"p":0.7},{"i":1,"j":0,"p":0.3}]})");
  CHECK(io::weyl_map_from_json(j).weights == s.weights);
  CHECK_THROWS_AS(io::weyl_map_from_json(Json::parse(R"({"d":2,"weights":[{"i":0,"j":0,"p":0.5}]})")), InvalidArgument);
}

TEST_CASE("profiles") {
  const auto e = io::profile_from_json(Json::parse(R"({"r":0.5,"c":2})"));
  CHECK(e.is_exponential());
  CHECK(e.amplitude() == 0.5);
  CHECK(io::to_json(e).dump() == R"({"r":0.5,"c":2.0})");
  const auto t = io::profile_from_json(Json::parse(R"({"samples":[[0,0],[1,0.25],[2,0.5]]})"));
  CHECK_FALSE(t.is_exponential());
  CHECK(io::profile_from_json(io::to_json(t)).samples() == t.samples());
  CHECK(io::profile_from_json(Json("zero")).value(5.0) == 0.0);
  CHECK_THROWS_AS(io::profile_from_json(Json::parse(R"({"r":0.5})")), InvalidArgument);
}

TEST_CASE("mixtures") {
  const char* text = R"({"d":3,"profile":{"r":0.6666666666666666,"c":1},
    "components":[{"x":0.5,"G":{"m":1,"w":0,"n":3}},{"x":0.5,"G":{"d":3,"m":3,"w":0,"n":1}}]})";
  const auto mix = io::mixture_from_json(Json::parse(text));
  CHECK(mix.size() == 2);
  CHECK(mix.semigroup_mode());
  const auto back = io::mixture_from_json(io::to_json(mix));
  CHECK(back.components()[1].group == mix.components()[1].group);
}

TEST_CASE("verdicts") {
  MarkovVerdict v;
  v.verdict = Verdict::NonMarkovian;
  v.witness = Witness{PhasePoint::make(2, 0, 3), 0.5, -0.25};
  v.window_start = 0.001;
  v.window_end = 10.0;
  CHECK(io::to_json(v).dump() ==
        R"({"verdict":"NonMarkovian","witness":{"alpha":[2,0],"t":0.5,"gamma":-0.25},"window":[0.001,10.0]})");
  v.witness.reset();
  v.verdict = Verdict::CPDivisible;
  CHECK(io::to_json(v)["witness"].is_null());
}

TEST_CASE("dynamic specs") {
  auto s = io::dynamic_spec_from_json(Json::parse(R"({"subgroup":{"d":3,"m":1,"w":0,"n":3},"profile":{"r":0.5,"c":1}})"));
  CHECK(s.kind == "isotropic");
  s = io::dynamic_spec_from_json(Json::parse(R"({"d":4,"dephasing":[1,2],"profile":{"r":0.5,"c":1}})"));
  CHECK(s.kind == "dephasing");
  CHECK(s.dynamics.direction().weight(PhasePoint::make(1, 2, 4)) == 1.0);
  s = io::dynamic_spec_from_json(Json::parse(R"({"d":2,"weights":[{"i":1,"j":1,"p":1}],"profile":"zero"})"));
  CHECK(s.kind == "weights");
  CHECK_THROWS_AS(io::dynamic_spec_from_json(Json::parse(R"({"d":2,"profile":"zero"})")), InvalidArgument);
  CHECK_THROWS_AS(io::dynamic_spec_from_json(Json::parse(R"({"d":2,"dephasing":[0,0],"profile":"zero"})")), InvalidArgument);
}

TEST_CASE("spec arguments: inline JSON or a file") {
  CHECK(io::load_json_argument(R"(  {"a": 1})")["a"] == 1);
  const std::string path = "test_io_spec.json";
  {
    std::ofstream f(path);
    f << R"({"b": 2})";
  }
  CHECK(io::load_json_argument(path)["b"] == 2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::load_json_argument("no_such_file.json"), InvalidArgument);
  CHECK_THROWS_AS(io::load_json_argument("{oops"), InvalidArgument);
}

TEST_CASE("rate CSV is deterministic") {
  const auto dyn = WeylDynamics::isotropic(make_subgroup(2, 1, 0, 2), ProbabilityProfile::exponential(0.5, 1.0));
  const std::vector<double> grid{0.5, 1.0};
  const auto csv = io::rates_csv(kernels::dft_rates_on_grid(dyn, grid));
  CHECK(csv.rfind("t,gamma_0,gamma_1,gamma_2,gamma_3\n0.5,0,", 0) == 0);
  CHECK(csv == io::rates_csv(kernels::dft_rates_on_grid(dyn, grid)));
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1.0 / 3) == "0.333333333333");
  CHECK(io::format_number(1e-20) == "1e-20");
}
