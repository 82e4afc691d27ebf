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

#ifndef FOCKRAIL_KLM_HPP_
#define FOCKRAIL_KLM_HPP_

#include <Eigen/Dense>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "fockrail/circuit.hpp"
#include "fockrail/measurement.hpp"

namespace fockrail {

/// One temporally-composed beam splitter of a non-linear diagonal gate,
/// prepared with n_minus photons and post-selected on n_plus.
struct LoopStage {
  BeamSplitterConfig config;
  int n_minus = 0;
  int n_plus = 0;
};

struct NonlinearDiagonalSpec {
  std::vector<LoopStage> stages;

  bool is_diagonal() const;
};

struct GateReport {
  std::string gate;
  /// Diagonal coefficient p[m] per internal photon count.
  std::vector<Complex> coefficients;
  double success_probability = 0.0;
  std::map<std::string, double> deviations;
  std::map<std::string, double> parameters;
};

/// Chains single-loop blocks stage by stage. Throws std::invalid_argument
/// unless the prepared and measured totals agree. success_probability is the
/// smallest |p[m]|^2 for m <= subspace_max (default m_max).
GateReport nd_gate(const NonlinearDiagonalSpec& spec, int m_max, int subspace_max = -1);

/// cos(theta1) = sqrt((3 - sqrt2)/7), cos(theta2) = -sqrt(5 - 3 sqrt2), with
/// the free phases tau1 = tau2 = 0 (so gamma1 = gamma2 = 0).
struct NonlinearSign {
  NonlinearDiagonalSpec spec;
  GateReport report;
};

/// The NS gate: <1|B[U1]|1> then <0|B[U2]|0>. The report tabulates
/// coefficients for m = 0..3 and takes the success probability on m <= 2.
NonlinearSign nonlinear_sign();

/// Residuals of the three phase and two angle conditions that define NS:
///   gamma1 + tau1, 2 gamma1 + gamma2 - tau2, 3 gamma1 - tau1 + 2 gamma2 - 2 tau2,
///   c1 + (1 - 2 c1^2) c2, c1 - c1 (2 - 3 c1^2) c2^2.
std::array<double, 5> ns_condition_residuals(const BeamSplitterConfig& stage1, const BeamSplitterConfig& stage2);

/// (3 - sqrt2) / 7.
double ns_success_probability();
/// (11 - 6 sqrt2) / 49.
double cz_success_probability();

/// H = (1/sqrt2) [[1, 1], [1, -1]].
UnitaryMatrix hadamard_bs();

/// Hadamard on modes (a, b), NS on a, NS on b, Hadamard again, with every NS
/// stage drawing a fresh ancilla time-bin. Externals are the four ancilla
/// time-bins in execution order.
CircuitOp cz_circuit(int internal_modes, int mode_a, int mode_b);

struct ControlledZ {
  CircuitOp circuit;
  OccupationVector prep;
  OccupationVector meas;
  /// Post-selected action on internal (0,0), (0,1), (1,0), (1,1).
  Eigen::Matrix4cd action;
  GateReport report;
};

ControlledZ controlled_z();

struct DualRailCzCheck {
  /// <rep(i)| block |rep(j)> over qubit pairs |00>, |01>, |10>, |11>.
  Eigen::Matrix4cd action;
  double scale = 0.0;
  double deviation = 0.0;
  /// (|00> + |11>)/sqrt2 should map to (|00> - |11>)/sqrt2 after
  /// normalization.
  double superposition_deviation = 0.0;
};

/// Dual-rail embedding of the CZ circuit: qubit k lives on modes (2k, 2k+1)
/// with the value-1 rail first; the Hadamards couple the two value-1 rails.
DualRailCzCheck dual_rail_cz_check();

}  // namespace fockrail

#endif  // FOCKRAIL_KLM_HPP_
