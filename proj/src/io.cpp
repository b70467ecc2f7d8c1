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

#include "weyl/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "weyl/errors.hpp"

namespace weyl::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidArgument(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

double number_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw InvalidArgument(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

int dimension(const Json& j) {
  const int d = int_field(j, "d");
  if (d < 2) throw InvalidArgument("dimension d must be >= 2");
  return d;
}

}  // namespace

Json to_json(const SubgroupHNF& h) {
  return Json{{"d", h.d()}, {"m", h.m()}, {"w", h.w()}, {"n", h.n()}};
}

SubgroupHNF subgroup_from_json(const Json& j) {
  return make_subgroup(dimension(j), int_field(j, "m"), int_field(j, "w"), int_field(j, "n"));
}

Json elements_to_json(std::span<const PhasePoint> points) {
  std::vector<PhasePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const auto& u : sorted) out.push_back({u.i, u.j});
  return out;
}

PhasePoint point_from_json(const Json& j, int d) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw InvalidArgument("phase point must be an [i, j] integer pair");
  }
  return PhasePoint::make(j[0].get<long>(), j[1].get<long>(), d);
}

Json to_json(const CMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back({a(r, c).real(), a(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InvalidArgument("matrix must be a nested array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix a(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InvalidArgument("matrix rows have unequal lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<size_t>(c)];
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("matrix entries must be [re, im]");
      a(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return a;
}

Json to_json(const WeylMapSpec& spec) {
  Json weights = Json::array();
  for (size_t a = 0; a < spec.weights.size(); ++a) {
    if (spec.weights[a] == 0.0) continue;
    const PhasePoint u = PhasePoint::from_index(static_cast<int>(a), spec.d);
    weights.push_back({{"i", u.i}, {"j", u.j}, {"p", spec.weights[a]}});
  }
  return Json{{"d", spec.d}, {"weights", std::move(weights)}};
}

WeylMapSpec weyl_map_from_json(const Json& j) {
  const int d = dimension(j);
  WeylMapSpec spec{d, std::vector<double>(static_cast<size_t>(d) * d, 0.0)};
  const Json& weights = field(j, "weights");
  if (!weights.is_array()) throw InvalidArgument("\"weights\" must be an array");
  for (const auto& w : weights) {
    const PhasePoint u = PhasePoint::make(int_field(w, "i"), int_field(w, "j"), d);
    spec.weight(u) += number_field(w, "p");
  }
  validate(spec);
  return spec;
}

Json to_json(const ProbabilityProfile& p) {
  if (p.is_exponential()) return Json{{"r", p.amplitude()}, {"c", p.rate()}};
  Json samples = Json::array();
  for (const auto& [t, v] : p.samples()) samples.push_back({t, v});
  return Json{{"samples", std::move(samples)}};
}

ProbabilityProfile profile_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "zero") return ProbabilityProfile::zero();
  if (j.is_object() && j.contains("samples")) {
    std::vector<std::pair<double, double>> samples;
    for (const auto& s : j.at("samples")) {
      if (!s.is_array() || s.size() != 2) throw InvalidArgument("profile samples must be [t, p] pairs");
      samples.emplace_back(s[0].get<double>(), s[1].get<double>());
    }
    return ProbabilityProfile::tabulated(std::move(samples));
  }
  return ProbabilityProfile::exponential(number_field(j, "r"), number_field(j, "c"));
}

Json to_json(const MixtureSpec& mix) {
  Json comps = Json::array();
  for (const auto& c : mix.components()) comps.push_back({{"x", c.weight}, {"G", to_json(c.group)}});
  return Json{{"d", mix.d()}, {"profile", to_json(mix.profile())}, {"components", std::move(comps)}};
}

MixtureSpec mixture_from_json(const Json& j) {
  const int d = dimension(j);
  std::vector<MixtureComponent> comps;
  const Json& list = field(j, "components");
  if (!list.is_array()) throw InvalidArgument("\"components\" must be an array");
  for (const auto& c : list) {
    const Json& g = field(c, "G");
    Json with_d = g;
    if (!with_d.contains("d")) with_d["d"] = d;
    comps.push_back({number_field(c, "x"), subgroup_from_json(with_d)});
  }
  return MixtureSpec(d, std::move(comps), profile_from_json(field(j, "profile")));
}

Json to_json(const MarkovVerdict& v) {
  Json out{{"verdict", to_string(v.verdict)}};
  if (v.witness) {
    out["witness"] = Json{{"alpha", {v.witness->alpha.i, v.witness->alpha.j}},
                          {"t", v.witness->t},
                          {"gamma", v.witness->gamma}};
  } else {
    out["witness"] = nullptr;
  }
  out["window"] = {v.window_start, v.window_end};
  return out;
}

DynamicSpec dynamic_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("spec must be a JSON object");
  if (j.contains("components")) {
    MixtureSpec mix = mixture_from_json(j);
    WeylDynamics dyn = mix.dynamics();
    return {"mixture", std::move(dyn), std::move(mix)};
  }
  const ProbabilityProfile profile = profile_from_json(field(j, "profile"));
  if (j.contains("subgroup")) {
    Json g = j.at("subgroup");
    if (!g.contains("d") && j.contains("d")) g["d"] = j.at("d");
    return {"isotropic", WeylDynamics::isotropic(subgroup_from_json(g), profile), std::nullopt};
  }
  if (j.contains("dephasing")) {
    const PhasePoint u = point_from_json(j.at("dephasing"), dimension(j));
    if (u.is_zero()) throw InvalidArgument("dephasing direction must be nonzero");
    return {"dephasing", WeylDynamics::dephasing(u, profile), std::nullopt};
  }
  if (j.contains("weights")) {
    return {"weights", WeylDynamics(weyl_map_from_json(j), profile), std::nullopt};
  }
  throw InvalidArgument("spec needs one of \"components\", \"subgroup\", \"dephasing\", \"weights\"");
}

Json load_json_argument(const std::string& arg) {
  const auto first = std::find_if_not(arg.begin(), arg.end(), [](unsigned char ch) { return std::isspace(ch); });
  std::string text;
  if (first != arg.end() && *first == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw InvalidArgument("cannot open spec file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("spec is not valid JSON: ") + e.what());
  }
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string rates_csv(std::span<const RateTable> tables) {
  std::string out = "t";
  const int d = tables.empty() ? 0 : tables.front().d;
  for (int a = 0; a < d * d; ++a) out += ",gamma_" + std::to_string(a);
  out += '\n';
  for (const auto& row : tables) {
    out += format_number(row.t);
    for (double g : row.gamma) {
      out += ',';
      out += format_number(g);
    }
    out += '\n';
  }
  return out;
}

}  // namespace weyl::io
