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

#include "fockrail/program.hpp"

#include <stdexcept>

#include "fockrail/qudit.hpp"

namespace fockrail {

int program_truncation(const CircuitProgram& program) {
  return default_truncation(program.preps, OccupationVector::vacuum(2 * program.loops - 1));
}

OutcomeDistribution simulate_generator(const CircuitProgram& program, int truncation) {
  const RailLayout layout = program.layout();
  const CircuitOp c = build_rail(layout);
  const FockVector internal = FockVector::basis_state(OccupationVector::vacuum(layout.internal()));
  return outcome_distribution(c, internal, prepare_inputs(program.preps, truncation));
}

OutcomeDistribution simulate_stepwise(const CircuitProgram& program, int truncation) {
  const int m = 2 * program.loops - 1;
  std::map<OccupationVector, FockVector> branches;
  branches.emplace(OccupationVector(std::vector<int>{}),
                   FockVector::basis_state(OccupationVector::vacuum(m), truncation));

  for (int t = 0; t < program.timebins; ++t) {
    const TimebinPrep& prep = program.preps[static_cast<std::size_t>(t)];
    const FockVector input = prep.coherent
                                 ? coherent_state(*prep.coherent, std::min(truncation, coherent_truncation(*prep.coherent)))
                                 : FockVector::basis_state(OccupationVector{prep.photons});
    std::map<OccupationVector, FockVector> next;
    for (const auto& [prefix, state] : branches) {
      RailLayout bin(program.loops, 1);
      for (int k = 0; k < program.loops; ++k) {
        auto it = program.bs.find({t, k});
        if (it != program.bs.end()) bin.set(0, k, it->second);
      }
      for (const FeedForwardRule& r : program.feedforward) {
        if (r.set_t == t && prefix[r.when_t] == r.when_n) bin.set(0, r.loop, r.config);
      }
      const CircuitOp op(rail_timebin(bin, 0), m, 1, "t" + std::to_string(t));
      BranchSet split = branch_states(op, state, input, truncation);
      for (auto& [meas, after] : split.branches) {
        if (after.empty()) continue;
        next.emplace(concat(prefix, meas), std::move(after));
      }
    }
    branches = std::move(next);
  }

  OutcomeDistribution dist;
  for (const auto& [outcome, state] : branches) {
    const double p = state.norm2();
    if (p > kNegligibleProbability) dist.entries.emplace(outcome, p);
  }
  dist.residual = std::max(0.0, 1.0 - dist.total());
  if (dist.residual < 1e-15) dist.residual = 0.0;
  return dist;
}

bool passes_postselection(const CircuitProgram& program, const OccupationVector& outcome) {
  for (std::size_t t = 0; t < program.measurements.size(); ++t) {
    const auto& want = program.measurements[t].postselect;
    if (want && outcome[static_cast<int>(t)] != *want) return false;
  }
  return true;
}

SimulationResult simulate(const CircuitProgram& program, int truncation) {
  SimulationResult r;
  r.truncation = truncation >= 0 ? truncation : program_truncation(program);
  const OutcomeDistribution all = program.has_feedforward() ? simulate_stepwise(program, r.truncation)
                                                            : simulate_generator(program, r.truncation);
  r.distribution.residual = all.residual;
  for (const auto& [outcome, p] : all.entries) {
    if (passes_postselection(program, outcome)) {
      r.distribution.entries.emplace(outcome, p);
    } else {
      r.rejected += p;
    }
  }
  return r;
}

SampleResult sample_program(const CircuitProgram& program, std::uint64_t shots, std::uint64_t seed, int truncation) {
  SampleResult r;
  r.truncation = truncation >= 0 ? truncation : program_truncation(program);
  const OutcomeDistribution all = program.has_feedforward() ? simulate_stepwise(program, r.truncation)
                                                            : simulate_generator(program, r.truncation);
  const Histogram drawn = sample_distribution(all, shots, seed);
  r.histogram.shots = drawn.shots;
  r.histogram.seed = drawn.seed;
  r.histogram.overflow = drawn.overflow;
  for (const auto& [outcome, count] : drawn.counts) {
    if (passes_postselection(program, outcome)) {
      r.histogram.counts.emplace(outcome, count);
    } else {
      r.rejected += count;
    }
  }
  if (program.encoding) r.ditstream = ditstream(r.histogram, program.encoding->arity);
  return r;
}

Complex program_element(const CircuitProgram& program, const OccupationVector& in, const OccupationVector& out) {
  if (program.has_feedforward()) throw std::invalid_argument("matrix elements are undefined under feed-forward");
  const CircuitOp c = build_rail(program.layout());
  if (in.modes() != c.matrix().dim() || out.modes() != c.matrix().dim()) {
    throw DimensionError("occupation vectors need " + std::to_string(c.matrix().dim()) + " modes");
  }
  return matrix_element(c.matrix(), in, out);
}

}  // namespace fockrail
