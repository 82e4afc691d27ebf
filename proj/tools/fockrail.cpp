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

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fockrail/json_out.hpp"
#include "fockrail/program.hpp"
#include "fockrail/qudit.hpp"
#include "fockrail/verify.hpp"

namespace {

using fockrail::ErrorClass;

enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kIo = 3,
  kParseBase = 10,
  kTruncation = 20,
  kDimension = 21,
  kRuntime = 22,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text << "\n";
}

fockrail::OccupationVector parse_counts(const std::string& text) {
  std::vector<int> counts;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) throw CLI::ValidationError("occupation", "bad photon count '" + item + "'");
    counts.push_back(v);
  }
  return fockrail::OccupationVector(counts);
}

void cap_threads() {
  if (const char* env = std::getenv("FOCKRAIL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(std::min(n, omp_get_max_threads()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  cap_threads();
  CLI::App app{"fockrail: exact-amplitude linear-optical circuit simulator"};
  app.require_subcommand(1);
  bool error_json = false;
  app.add_flag("--error-json", error_json, "Print errors as JSON on stdout");

  std::string file;
  std::string json_path;
  int truncation = -1;

  auto* simulate = app.add_subcommand("simulate", "Exact outcome distribution of a program");
  simulate->add_option("file", file, "Program file")->required();
  simulate->add_option("--truncation", truncation, "Photon cutoff")->check(CLI::NonNegativeNumber);
  simulate->add_option("--json", json_path, "Write JSON here instead of stdout");

  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  auto* sample = app.add_subcommand("sample", "Seeded sampling of a program");
  sample->add_option("file", file, "Program file")->required();
  sample->add_option("--shots", shots, "Number of shots")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "RNG seed")->required();
  sample->add_option("--truncation", truncation, "Photon cutoff")->check(CLI::NonNegativeNumber);
  sample->add_option("--json", json_path, "Write JSON here instead of stdout");

  std::string in_text;
  std::string out_text;
  auto* element = app.add_subcommand("element", "Matrix element of the program generator");
  element->add_option("file", file, "Program file")->required();
  element->add_option("--in", in_text, "Input occupation, internal then external modes")->required();
  element->add_option("--out", out_text, "Output occupation, external then internal modes")->required();
  element->add_option("--json", json_path, "Write JSON here instead of stdout");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::vector<std::string> suite_choices = fockrail::verify_suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));

  std::string gate_name;
  std::string report_path;
  auto* gate = app.add_subcommand("gate", "Gate report for ns or cz");
  gate->add_option("name", gate_name, "Gate")->required()->check(CLI::IsMember({"ns", "cz"}));
  gate->add_option("--report", report_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto fail = [&](int code, const nlohmann::json& j, const std::string& message) {
    std::cerr << "fockrail: " << message << "\n";
    if (error_json) std::cout << fockrail::emit_json(j) << "\n";
    return code;
  };

  try {
    if (*simulate) {
      const auto program = fockrail::parse_program(read_file(file));
      write_output(json_path, fockrail::emit_json(fockrail::distribution_json(fockrail::simulate(program, truncation))));
    } else if (*sample) {
      const auto program = fockrail::parse_program(read_file(file));
      const auto result = fockrail::sample_program(program, shots, seed, truncation);
      const auto j = program.encoding ? fockrail::ditstream_json(result, *program.encoding)
                                      : fockrail::histogram_json(result);
      write_output(json_path, fockrail::emit_json(j));
    } else if (*element) {
      const auto program = fockrail::parse_program(read_file(file));
      const auto in = parse_counts(in_text);
      const auto out = parse_counts(out_text);
      const fockrail::Complex value = fockrail::program_element(program, in, out);
      write_output(json_path, fockrail::emit_json(fockrail::element_json(in, out, value)));
    } else if (*verify) {
      bool ok = true;
      const std::vector<std::string> names =
          suite == "all" ? fockrail::verify_suite_names() : std::vector<std::string>{suite};
      for (const std::string& name : names) {
        const auto result = fockrail::run_verify_suite(name);
        std::cout << fockrail::format_suite(result);
        ok = ok && result.passed();
      }
      return ok ? kOk : kVerifyFailed;
    } else if (*gate) {
      const fockrail::GateReport report =
          gate_name == "ns" ? fockrail::nonlinear_sign().report : fockrail::controlled_z().report;
      write_output(report_path, fockrail::emit_json(fockrail::gate_report_json(report)));
    }
  } catch (const fockrail::ParseError& e) {
    return fail(kParseBase + static_cast<int>(e.error_class()), fockrail::parse_error_json(e), e.what());
  } catch (const IoError& e) {
    return fail(kIo, fockrail::error_json("IO", e.what()), e.what());
  } catch (const CLI::ValidationError& e) {
    return fail(kUsage, fockrail::error_json("USAGE", e.what()), e.what());
  } catch (const fockrail::TruncationError& e) {
    return fail(kTruncation, fockrail::error_json("TRUNCATION", e.what()), e.what());
  } catch (const fockrail::DimensionError& e) {
    return fail(kDimension, fockrail::error_json("DIMENSION", e.what()), e.what());
  } catch (const fockrail::SizeGuardError& e) {
    return fail(kDimension, fockrail::error_json("SIZE_GUARD", e.what()), e.what());
  } catch (const std::exception& e) {
    return fail(kRuntime, fockrail::error_json("RUNTIME", e.what()), e.what());
  }
  return kOk;
}
