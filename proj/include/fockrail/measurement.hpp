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

#ifndef FOCKRAIL_MEASUREMENT_HPP_
#define FOCKRAIL_MEASUREMENT_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "fockrail/circuit.hpp"
#include "fockrail/fock.hpp"

namespace fockrail {

/// The internal-state map <n-|C|n+> extracted from a circuit by preparing
/// the external input in `prep` and measuring the external output in `meas`.
///
/// The image of an internal basis state m is
///   sum_{m'} <m, prep| B[U] |meas, m'> <m'|
/// so the internal photon count changes by prep.total() - meas.total().
class ProjectedBlock {
 public:
  ProjectedBlock(CircuitOp op, OccupationVector prep, OccupationVector meas);

  const CircuitOp& op() const { return op_; }
  const OccupationVector& prep() const { return prep_; }
  const OccupationVector& meas() const { return meas_; }

  /// Internal photons after the block, or a negative number when the block
  /// annihilates every state with `internal_photons` photons.
  int output_photons(int internal_photons) const {
    return internal_photons + prep_.total() - meas_.total();
  }

  FockVector apply(const FockVector& internal) const;

  /// Rows over FockSector(M, internal_photons), columns over the output
  /// sector. Zero columns when the output photon count is negative.
  Eigen::MatrixXcd sector_matrix(int internal_photons) const;

  /// Largest singular value over all input sectors up to `max_photons`.
  double operator_norm(int max_photons) const;

 private:
  CircuitOp op_;
  OccupationVector prep_;
  OccupationVector meas_;
};

ProjectedBlock project_block(const CircuitOp& c, const OccupationVector& prep, const OccupationVector& meas);

/// Outcomes below this probability are rounding residue of exact zeros and
/// are left out of distributions.
inline constexpr double kNegligibleProbability = 1e-24;

/// Measurement outcome on the external output modes, with the residual
/// probability mass lost to truncation.
struct OutcomeDistribution {
  std::map<OccupationVector, double> entries;
  double residual = 0.0;

  double total() const;
  double probability(const OccupationVector& outcome) const;
};

/// Unnormalized internal state left behind by each external outcome.
struct BranchSet {
  std::map<OccupationVector, FockVector> branches;
  double residual = 0.0;
};

/// Runs c on internal (x) prep and splits the output by external outcome.
/// The joint input is cut at `truncation` photons (negative: the sum of the
/// two truncations).
BranchSet branch_states(const CircuitOp& c, const FockVector& internal, const FockVector& prep,
                        int truncation = -1);

OutcomeDistribution outcome_distribution(const CircuitOp& c, const FockVector& internal_in,
                                         const OccupationVector& prep);
OutcomeDistribution outcome_distribution(const CircuitOp& c, const FockVector& internal_in,
                                         const FockVector& prep);

/// Sampled outcome counts. Draws that land in the residual mass are counted
/// in `overflow`.
struct Histogram {
  std::map<OccupationVector, std::uint64_t> counts;
  std::uint64_t overflow = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  std::uint64_t count(const OccupationVector& outcome) const;
};

/// Total-variation distance between empirical frequencies and `dist`,
/// counting overflow against the residual.
double total_variation(const Histogram& h, const OutcomeDistribution& dist);

/// i.i.d. draws from `dist`; shot k uses CounterRng(seed, k). OpenMP-parallel
/// over shots with per-thread tallies.
Histogram sample_distribution(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed);

/// Single-threaded reference for sample_distribution; identical output.
Histogram sample_distribution_serial(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed);

Histogram sample(const CircuitOp& c, const FockVector& internal_in, const OccupationVector& prep,
                 std::uint64_t shots, std::uint64_t seed);

/// Two-stage feed-forward protocol: run `first`, measure, and choose the
/// second-stage circuit from the first outcome.
///
/// The chooser is evaluated eagerly on every first-stage outcome carrying at
/// most `max_photons` photons; each choice must be temporally compatible
/// with `first`.
class FeedForward {
 public:
  using Chooser = std::function<CircuitOp(const OccupationVector&)>;

  FeedForward(CircuitOp first, const Chooser& chooser, int max_photons);

  const CircuitOp& first() const { return first_; }
  const CircuitOp& second(const OccupationVector& meas1) const;

  /// <n1-|C1|n1+><n2-|C2[n1+]|n2+> applied to an internal state.
  FockVector branch(const FockVector& internal, const OccupationVector& prep1, const OccupationVector& meas1,
                    const OccupationVector& prep2, const OccupationVector& meas2) const;

  /// Joint distribution over concat(meas1, meas2).
  OutcomeDistribution distribution(const FockVector& internal, const OccupationVector& prep1,
                                   const OccupationVector& prep2) const;

  /// Marginal distribution of the first-stage outcome.
  OutcomeDistribution first_stage(const FockVector& internal, const OccupationVector& prep1) const;

  /// Per shot: draw the first outcome, select the second circuit, draw the
  /// second outcome from the collapsed internal state. Both draws come from
  /// CounterRng(seed, shot).
  Histogram sample(const FockVector& internal, const OccupationVector& prep1, const OccupationVector& prep2,
                   std::uint64_t shots, std::uint64_t seed) const;

 private:
  CircuitOp first_;
  int max_photons_;
  std::map<OccupationVector, CircuitOp> choices_;
};

}  // namespace fockrail

#endif  // FOCKRAIL_MEASUREMENT_HPP_
