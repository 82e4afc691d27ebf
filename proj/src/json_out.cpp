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

#include "fockrail/json_out.hpp"

#include <cmath>
#include <cstdio>

namespace fockrail {

using nlohmann::json;

namespace {

void emit(const json& v, std::string& out) {
  switch (v.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        emit(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        emit(v[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      std::string s(buf);
      if (s.find_first_of(".e") == std::string::npos) s += ".0";
      out += s;
      break;
    }
    default:
      out += v.dump();
  }
}

json occupation(const OccupationVector& n) { return json(n.counts()); }

json outcome_entries_base(const std::string& kind, int truncation) {
  json j;
  j["version"] = kJsonVersion;
  j["kind"] = kind;
  j["truncation"] = truncation;
  j["entries"] = json::array();
  return j;
}

}  // namespace

std::string emit_json(const json& value) {
  std::string out;
  emit(value, out);
  return out;
}

json distribution_json(const SimulationResult& r) {
  json j = outcome_entries_base("distribution", r.truncation);
  j["seed"] = nullptr;
  for (const auto& [outcome, p] : r.distribution.entries) {
    j["entries"].push_back({{"outcome", occupation(outcome)}, {"probability", p}});
  }
  j["residual"] = r.distribution.residual;
  j["rejected"] = r.rejected;
  return j;
}

json histogram_json(const SampleResult& r) {
  json j = outcome_entries_base("histogram", r.truncation);
  j["seed"] = r.histogram.seed;
  j["shots"] = r.histogram.shots;
  for (const auto& [outcome, c] : r.histogram.counts) {
    j["entries"].push_back({{"outcome", occupation(outcome)}, {"count", c}});
  }
  j["overflow"] = r.histogram.overflow;
  j["rejected"] = r.rejected;
  j["residual"] = r.histogram.shots ? static_cast<double>(r.histogram.overflow) / static_cast<double>(r.histogram.shots) : 0.0;
  return j;
}

json ditstream_json(const SampleResult& r, const EncodingDirective& e) {
  json j = outcome_entries_base("ditstream", r.truncation);
  j["seed"] = r.histogram.seed;
  j["shots"] = r.histogram.shots;
  j["d"] = e.arity;
  j["alpha"] = {e.alpha.real(), e.alpha.imag()};
  for (const auto& [dits, c] : r.ditstream) j["entries"].push_back({{"outcome", dits}, {"count", c}});
  j["overflow"] = r.histogram.overflow;
  j["rejected"] = r.rejected;
  j["residual"] = r.histogram.shots ? static_cast<double>(r.histogram.overflow) / static_cast<double>(r.histogram.shots) : 0.0;
  return j;
}

json element_json(const OccupationVector& in, const OccupationVector& out, Complex value) {
  json j;
  j["version"] = kJsonVersion;
  j["kind"] = "element";
  j["in"] = occupation(in);
  j["out"] = occupation(out);
  j["re"] = value.real();
  j["im"] = value.imag();
  j["modulus2"] = std::norm(value);
  return j;
}

json gate_report_json(const GateReport& r) {
  json j;
  j["version"] = kJsonVersion;
  j["kind"] = "gate_report";
  j["gate"] = r.gate;
  j["coefficients"] = json::array();
  for (Complex c : r.coefficients) j["coefficients"].push_back({c.real(), c.imag()});
  j["success_probability"] = r.success_probability;
  j["deviations"] = json::object();
  for (const auto& [k, v] : r.deviations) j["deviations"][k] = v;
  j["parameters"] = json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  return j;
}

json parse_error_json(const ParseError& e) {
  json j = error_json(std::string(error_class_name(e.error_class())), e.detail());
  j["error"]["line"] = e.line();
  j["error"]["column"] = e.column();
  return j;
}

json error_json(const std::string& error_class, const std::string& message) {
  json j;
  j["version"] = kJsonVersion;
  j["kind"] = "error";
  j["error"] = {{"class", error_class}, {"message", message}};
  return j;
}

}  // namespace fockrail
