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

#ifndef FOCKRAIL_JSON_OUT_HPP_
#define FOCKRAIL_JSON_OUT_HPP_

#include <json.hpp>
#include <string>

#include "fockrail/dsl.hpp"
#include "fockrail/klm.hpp"
#include "fockrail/program.hpp"

namespace fockrail {

inline constexpr int kJsonVersion = 1;

/// Compact serialization with keys sorted and every float printed to 17
/// significant digits; integers stay integers. Non-finite floats become null.
std::string emit_json(const nlohmann::json& value);

nlohmann::json distribution_json(const SimulationResult& result);
nlohmann::json histogram_json(const SampleResult& result);
/// Ditstream tallies; requires a program encoding.
nlohmann::json ditstream_json(const SampleResult& result, const EncodingDirective& encoding);
nlohmann::json element_json(const OccupationVector& in, const OccupationVector& out, Complex value);
nlohmann::json gate_report_json(const GateReport& report);
nlohmann::json parse_error_json(const ParseError& error);
nlohmann::json error_json(const std::string& error_class, const std::string& message);

}  // namespace fockrail

#endif  // FOCKRAIL_JSON_OUT_HPP_
