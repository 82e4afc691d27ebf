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

#ifndef FOCKRAIL_PROGRAM_HPP_
#define FOCKRAIL_PROGRAM_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "fockrail/dsl.hpp"

namespace fockrail {

/// Exact outcome probabilities of a program. Outcomes that fail a
/// post-selection are summed into `rejected`; the accepted entries keep
/// their joint (unconditioned) probabilities.
struct SimulationResult {
  OutcomeDistribution distribution;
  double rejected = 0.0;
  int truncation = 0;
};

/// Prepared photons + 4, where a coherent bin counts coherent_truncation(alpha).
int program_truncation(const CircuitProgram& program);

/// Outcome distribution over all external time-bins from the full rail
/// generator. Feed-forward rules are ignored.
OutcomeDistribution simulate_generator(const CircuitProgram& program, int truncation);

/// Outcome distribution built time-bin by time-bin, branching on every
/// external outcome and applying feed-forward rules along each branch.
OutcomeDistribution simulate_stepwise(const CircuitProgram& program, int truncation);

/// Uses the full generator unless the program has feed-forward rules, then
/// applies post-selection. A negative truncation selects the default.
SimulationResult simulate(const CircuitProgram& program, int truncation = -1);

bool passes_postselection(const CircuitProgram& program, const OccupationVector& outcome);

struct SampleResult {
  /// Accepted shots only; overflow counts shots drawn from the residual.
  Histogram histogram;
  std::uint64_t rejected = 0;
  /// Accepted outcomes reduced mod d when the program has an encoding.
  std::map<std::vector<int>, std::uint64_t> ditstream;
  int truncation = 0;
};

/// Draws from the exact joint distribution with the CounterRng stream
/// contract of sample_distribution, then applies post-selection.
SampleResult sample_program(const CircuitProgram& program, std::uint64_t shots, std::uint64_t seed,
                            int truncation = -1);

/// <in|B[U]|out> of the rail generator. `in` lists internal then external
/// input modes; `out` lists external then internal output modes. Throws
/// std::invalid_argument for programs with feed-forward rules.
Complex program_element(const CircuitProgram& program, const OccupationVector& in, const OccupationVector& out);

}  // namespace fockrail

#endif  // FOCKRAIL_PROGRAM_HPP_
