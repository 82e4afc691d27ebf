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

#ifndef FOCKRAIL_RAIL_HPP_
#define FOCKRAIL_RAIL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fockrail/circuit.hpp"
#include "fockrail/measurement.hpp"

namespace fockrail {

/// N_L loops along a rail driven for N_H time-bins.
///
/// Mode numbering inside one time-bin: loops 0..N_L-1 are internal modes
/// 0..N_L-1 and the links between consecutive loops are internal modes
/// N_L..2N_L-2. Beam splitter k couples loop k to rail segment k. Segment 0
/// is the external input edge; segment k > 0 is link k-1 as left by the
/// previous time-bin. Its rail output feeds link k, or the external output
/// edge for the last loop. Links therefore delay a photon by one time-bin.
class RailLayout {
 public:
  RailLayout(int loops, int timebins, BeamSplitterConfig fill = BeamSplitterConfig::mirror());

  int loops() const { return loops_; }
  int timebins() const { return timebins_; }
  int internal() const { return 2 * loops_ - 1; }
  int dimension() const { return internal() + timebins_; }
  int edges() const { return 2 * loops_ + 1; }

  const BeamSplitterConfig& config(int timebin, int loop) const;
  void set(int timebin, int loop, const BeamSplitterConfig& config);

  bool operator==(const RailLayout&) const = default;

 private:
  std::size_t slot(int timebin, int loop) const;

  int loops_;
  int timebins_;
  std::vector<BeamSplitterConfig> configs_;
};

/// The (2N_L) x (2N_L) generator of time-bin t: rows (loops, links, input
/// edge), columns (output edge, loops, links).
UnitaryMatrix rail_timebin(const RailLayout& layout, int timebin);

/// Product over t of 1_t (+) U_t (+) 1_{N_H-t-1}, partitioned with 2N_L-1
/// internal and N_H external modes.
CircuitOp build_rail(const RailLayout& layout);

/// Same generator built by temporally composing the per-time-bin circuits.
CircuitOp build_rail_composed(const RailLayout& layout);

class TraceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Follows every input mode through a layout whose configs all generate
/// either the identity (mirror-like) or the swap (window-like), without
/// touching the generator. Entry i is the output mode reached from input
/// mode i, using the generator's row and column order.
std::vector<int> deterministic_trace(const RailLayout& layout);

/// Output occupation for an input occupation under a traced permutation.
OccupationVector route_occupation(const std::vector<int>& trace, const OccupationVector& input);

/// Preparation of one external input time-bin.
struct TimebinPrep {
  int photons = 0;
  std::optional<Complex> coherent;

  bool operator==(const TimebinPrep&) const = default;
};

struct SamplingRun {
  RailLayout layout;
  std::vector<TimebinPrep> preps;
  /// Initial loop and link photons; vacuum when empty.
  OccupationVector internal;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  /// Arity for ditstream output.
  std::optional<int> arity;
  /// Photon cutoff; negative picks the default.
  int truncation = -1;
};

struct SamplingResult {
  OutcomeDistribution exact;
  Histogram histogram;
  /// Per-shot outcomes reduced mod d, tallied.
  std::map<std::vector<int>, std::uint64_t> ditstream;
  int truncation = 0;
};

/// Default truncation: prepared photons + 4, with every coherent bin
/// contributing coherent_truncation(alpha).
int default_truncation(const std::vector<TimebinPrep>& preps, const OccupationVector& internal);

/// Joint state of the external inputs as a FockVector over N_H modes.
FockVector prepare_inputs(const std::vector<TimebinPrep>& preps, int truncation);

SamplingResult run_sampling(const SamplingRun& run);

/// Tally of counts mod d over a histogram; overflow shots are dropped.
std::map<std::vector<int>, std::uint64_t> ditstream(const Histogram& h, int arity);

}  // namespace fockrail

#endif  // FOCKRAIL_RAIL_HPP_
