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

#ifndef FOCKRAIL_VERIFY_HPP_
#define FOCKRAIL_VERIFY_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace fockrail {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// interchange, functor, hom, ns, cz, exph, singleloop.
const std::vector<std::string>& verify_suite_names();

/// Runs one named invariant suite; throws std::invalid_argument for an
/// unknown name.
SuiteResult run_verify_suite(std::string_view name);

/// One line per check: "PASS name value (tol ...)".
std::string format_suite(const SuiteResult& result);

}  // namespace fockrail

#endif  // FOCKRAIL_VERIFY_HPP_
