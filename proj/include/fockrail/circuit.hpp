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

#ifndef FOCKRAIL_CIRCUIT_HPP_
#define FOCKRAIL_CIRCUIT_HPP_

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockrail/functor.hpp"

namespace fockrail {

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Beam splitter with phase shifters. theta sets the split (transmittance
/// cos^2 theta); gamma is the global phase, rho the phase difference between
/// reflected photons and tau the phase difference between transmitted ones.
struct BeamSplitterConfig {
  double theta = 0.0;
  double gamma = 0.0;
  double rho = 0.0;
  double tau = 0.0;

  /// theta = gamma = rho = pi/2, generating the identity.
  static BeamSplitterConfig mirror();
  /// theta = gamma = tau = 0, generating the swap.
  static BeamSplitterConfig window();
  /// theta = pi/4 with all phases zero, generating (1/sqrt2)[[1,1],[1,-1]].
  static BeamSplitterConfig hadamard();

  double transmittance() const;
  double reflectance() const;

  bool operator==(const BeamSplitterConfig&) const = default;
};

/// e^{i angle}, exact when angle is an integer multiple of the double
/// nearest pi/2.
Complex unit_phase(double angle);

/// e^{i gamma} [[e^{-i rho} sin theta, e^{-i tau} cos theta],
///              [e^{i tau} cos theta, -e^{i rho} sin theta]]
UnitaryMatrix beam_splitter(const BeamSplitterConfig& config);

/// Routes mode i to mode perm[i]: entry (i, perm[i]) = 1.
UnitaryMatrix permutation(std::span<const int> perm);

/// U acting on the listed modes of a `dim`-mode system, identity elsewhere.
UnitaryMatrix embed(const UnitaryMatrix& u, std::span<const int> modes, int dim);

/// Generating matrix with declared internal and external mode counts.
///
/// Rows are input modes ordered (internal-in, external-in); columns are
/// output modes ordered (external-out, internal-out), so the blocks read
///   U = [[U^ie, U^ii],
///        [U^ee, U^ei]]
/// with U^ie of shape M x N, U^ii M x M, U^ee N x N and U^ei N x M.
class PartitionedUnitary {
 public:
  PartitionedUnitary(UnitaryMatrix matrix, int internal, int external);

  const UnitaryMatrix& matrix() const { return matrix_; }
  int internal() const { return internal_; }
  int external() const { return external_; }
  int dim() const { return matrix_.dim(); }

  Eigen::MatrixXcd ie() const;
  Eigen::MatrixXcd ii() const;
  Eigen::MatrixXcd ee() const;
  Eigen::MatrixXcd ei() const;

 private:
  UnitaryMatrix matrix_;
  int internal_;
  int external_;
};

/// A circuit: its partitioned generating matrix and a trail of the steps
/// that built it.
class CircuitOp {
 public:
  CircuitOp(PartitionedUnitary generator, std::vector<std::string> provenance);
  CircuitOp(UnitaryMatrix matrix, int internal, int external, std::string label);

  /// One loop: a beam splitter between one internal and one external mode.
  static CircuitOp loop(const BeamSplitterConfig& config);
  static CircuitOp identity(int internal, int external = 0);
  /// A loop on one of `internal` modes: the beam splitter couples `mode` to
  /// a single external mode while the other internal modes idle.
  static CircuitOp loop_on_mode(const BeamSplitterConfig& config, int internal, int mode);

  const PartitionedUnitary& generator() const { return generator_; }
  const UnitaryMatrix& matrix() const { return generator_.matrix(); }
  int internal() const { return generator_.internal(); }
  int external() const { return generator_.external(); }
  const std::vector<std::string>& provenance() const { return provenance_; }

 private:
  PartitionedUnitary generator_;
  std::vector<std::string> provenance_;
};

/// Joins c1 and c2 at their shared external system; generator
/// (1 (+) U1)(U2 (+) 1), internal system ordered (c2, c1).
CircuitOp spatial_compose(const CircuitOp& c1, const CircuitOp& c2);

/// Runs c1 then c2 over consecutive time-bins; generator
/// (U1 (+) 1)(1 (+) U2), external system ordered (c1, c2).
CircuitOp temporal_compose(const CircuitOp& c1, const CircuitOp& c2);

/// Largest generator-entry deviation between
/// (c11 spatial c21) temporal (c12 spatial c22) and
/// (c11 temporal c12) spatial (c21 temporal c22).
double verify_interchange(const CircuitOp& c11, const CircuitOp& c21, const CircuitOp& c12,
                          const CircuitOp& c22);

}  // namespace fockrail

#endif  // FOCKRAIL_CIRCUIT_HPP_
