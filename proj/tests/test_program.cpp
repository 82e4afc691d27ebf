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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fockrail/json_out.hpp"
#include "fockrail/program.hpp"
#include "fockrail/single_loop.hpp"

using namespace fockrail;
namespace fs = std::filesystem;

namespace {

CircuitProgram load(const std::string& name) {
  std::ifstream in(fs::path(FOCKRAIL_CORPUS_DIR) / "valid" / name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_program(s.str());
}

double max_gap(const OutcomeDistribution& a, const OutcomeDistribution& b) {
  double worst = 0.0;
  for (const auto& [o, p] : a.entries) worst = std::max(worst, std::abs(p - b.probability(o)));
  for (const auto& [o, p] : b.entries) worst = std::max(worst, std::abs(p - a.probability(o)));
  return worst;
}

}  // namespace

TEST(Program, HomInLoop) {
  const SimulationResult r = simulate(load("03_hom_in_loop.fr"));
  EXPECT_EQ(r.distribution.entries.size(), 2u);
  EXPECT_NEAR(r.distribution.probability(OccupationVector{0, 0}), 0.5, 1e-14);
  EXPECT_NEAR(r.distribution.probability(OccupationVector{0, 2}), 0.5, 1e-14);
}

TEST(Program, NsOnTwoPhotons) {
  const SimulationResult r = simulate(load("06_ns_on_2_photons.fr"));
  EXPECT_NEAR(r.distribution.probability(OccupationVector{0, 1, 0, 2}), (3.0 - std::sqrt(2.0)) / 7.0, 1e-12);
}

TEST(Program, StepwiseMatchesGenerator) {
  for (const char* name : {"03_hom_in_loop.fr", "09_two_loops_mirrors.fr", "11_three_loops_six_bins.fr",
                           "21_hadamard_pair_two_loops.fr", "22_coherent_two_loops.fr", "29_mixed_mirror_window.fr"}) {
    SCOPED_TRACE(name);
    const CircuitProgram p = load(name);
    const int t = program_truncation(p);
    EXPECT_LT(max_gap(simulate_generator(p, t), simulate_stepwise(p, t)), 1e-12);
  }
}

TEST(Program, FeedForwardSwitch) {
  const CircuitProgram p = load("12_feedforward_switch.fr");
  const SimulationResult r = simulate(p);
  EXPECT_NEAR(r.distribution.probability(OccupationVector{1, 0, 0}), 0.5, 1e-14);
  EXPECT_NEAR(r.distribution.probability(OccupationVector{0, 1, 0}), 0.5, 1e-14);
  // Without the rule the photon waits for the final mirror.
  const OutcomeDistribution plain = simulate_generator(p, program_truncation(p));
  EXPECT_NEAR(plain.probability(OccupationVector{0, 0, 1}), 0.5, 1e-14);
  EXPECT_THROW(program_element(p, OccupationVector{0, 1, 0, 0}, OccupationVector{1, 0, 0, 0}), std::invalid_argument);
}

TEST(Program, Postselection) {
  const CircuitProgram p = load("14_postselect_vacuum.fr");
  const SimulationResult r = simulate(p);
  const double s = std::sin(1.0);
  EXPECT_NEAR(r.rejected, 1.0 - s * s, 1e-14);
  EXPECT_NEAR(r.distribution.probability(OccupationVector{0, 1}), s * s, 1e-14);
  EXPECT_FALSE(passes_postselection(p, OccupationVector{1, 0}));
  EXPECT_TRUE(passes_postselection(p, OccupationVector{0, 0}));

  const SampleResult sr = sample_program(p, 20000, 4);
  EXPECT_NEAR(static_cast<double>(sr.rejected) / 20000.0, 1.0 - s * s, 0.02);
  EXPECT_EQ(sr.histogram.count(OccupationVector{1, 0}), 0u);
}

TEST(Program, ElementMatchesLoopFormula) {
  const CircuitProgram p = parse_program("rail loops=1 timebins=1\nbs t=0 loop=0 theta=0.3 gamma=0.2 tau=-0.4\nprepare t=0 n=1\nmeasure t=0\n");
  const Complex e = program_element(p, OccupationVector{2, 1}, OccupationVector{1, 2});
  EXPECT_LT(std::abs(e - loop_amplitude({p.layout().config(0, 0), 2, 1, 1})), 1e-13);
  EXPECT_THROW(program_element(p, OccupationVector{1}, OccupationVector{1}), DimensionError);
}

TEST(Program, CorpusSimulatesAndIsComplete) {
  for (const auto& e : fs::directory_iterator(fs::path(FOCKRAIL_CORPUS_DIR) / "valid")) {
    SCOPED_TRACE(e.path().filename().string());
    const CircuitProgram p = load(e.path().filename().string());
    const SimulationResult r = simulate(p);
    EXPECT_NEAR(r.distribution.total() + r.distribution.residual + r.rejected, 1.0, 1e-9);
  }
}

TEST(Program, SamplingJsonIsReproducible) {
  const CircuitProgram p = load("07_coherent_parity_ditstream.fr");
  const SampleResult a = sample_program(p, 5000, 123);
  const SampleResult b = sample_program(p, 5000, 123);
  EXPECT_EQ(emit_json(histogram_json(a)), emit_json(histogram_json(b)));
  EXPECT_EQ(emit_json(ditstream_json(a, *p.encoding)), emit_json(ditstream_json(b, *p.encoding)));
  const SampleResult c = sample_program(p, 5000, 124);
  EXPECT_NE(emit_json(histogram_json(a)), emit_json(histogram_json(c)));
  std::uint64_t dits = 0;
  for (const auto& [k, n] : a.ditstream) dits += n;
  EXPECT_EQ(dits + a.histogram.overflow, 5000u);
}
