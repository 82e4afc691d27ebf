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

#include "fockrail/klm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockrail/single_loop.hpp"

namespace fockrail {

bool NonlinearDiagonalSpec::is_diagonal() const {
  int in = 0;
  int out = 0;
  for (const LoopStage& s : stages) {
    in += s.n_minus;
    out += s.n_plus;
  }
  return in == out;
}

GateReport nd_gate(const NonlinearDiagonalSpec& spec, int m_max, int subspace_max) {
  if (!spec.is_diagonal()) throw std::invalid_argument("prepared and measured photon totals differ");
  if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
  if (subspace_max < 0 || subspace_max > m_max) subspace_max = m_max;

  GateReport r;
  r.gate = "nd";
  for (int m = 0; m <= m_max; ++m) {
    Complex p = 1.0;
    int loop = m;
    for (const LoopStage& s : spec.stages) {
      const LoopAmplitudeQuery q{s.config, loop, s.n_minus, s.n_plus};
      if (q.m_plus() < 0) {
        p = 0.0;
        break;
      }
      p *= loop_amplitude(q);
      loop = q.m_plus();
    }
    r.coefficients.push_back(p);
  }
  double success = 1.0;
  for (int m = 0; m <= subspace_max; ++m) success = std::min(success, std::norm(r.coefficients[static_cast<std::size_t>(m)]));
  r.success_probability = success;
  for (std::size_t k = 0; k < spec.stages.size(); ++k) {
    const std::string prefix = "stage" + std::to_string(k + 1) + ".";
    const BeamSplitterConfig& c = spec.stages[k].config;
    r.parameters[prefix + "theta"] = c.theta;
    r.parameters[prefix + "gamma"] = c.gamma;
    r.parameters[prefix + "rho"] = c.rho;
    r.parameters[prefix + "tau"] = c.tau;
    r.parameters[prefix + "n_minus"] = spec.stages[k].n_minus;
    r.parameters[prefix + "n_plus"] = spec.stages[k].n_plus;
  }
  return r;
}

double ns_success_probability() { return (3.0 - std::numbers::sqrt2) / 7.0; }

double cz_success_probability() { return (11.0 - 6.0 * std::numbers::sqrt2) / 49.0; }

std::array<double, 5> ns_condition_residuals(const BeamSplitterConfig& s1, const BeamSplitterConfig& s2) {
  const double c1 = std::cos(s1.theta);
  const double c2 = std::cos(s2.theta);
  return {std::abs(std::remainder(s1.gamma + s1.tau, 2.0 * std::numbers::pi)),
          std::abs(std::remainder(2.0 * s1.gamma + s2.gamma - s2.tau, 2.0 * std::numbers::pi)),
          std::abs(std::remainder(3.0 * s1.gamma - s1.tau + 2.0 * s2.gamma - 2.0 * s2.tau, 2.0 * std::numbers::pi)),
          std::abs(c1 + (1.0 - 2.0 * c1 * c1) * c2),
          std::abs(c1 - c1 * (2.0 - 3.0 * c1 * c1) * c2 * c2)};
}

NonlinearSign nonlinear_sign() {
  BeamSplitterConfig u1;
  u1.theta = std::acos(std::sqrt((3.0 - std::numbers::sqrt2) / 7.0));
  BeamSplitterConfig u2;
  u2.theta = std::acos(-std::sqrt(5.0 - 3.0 * std::numbers::sqrt2));

  NonlinearSign ns;
  ns.spec.stages = {{u1, 1, 1}, {u2, 0, 0}};
  ns.report = nd_gate(ns.spec, 3, 2);
  ns.report.gate = "ns";

  const auto& p = ns.report.coefficients;
  const std::array<double, 5> res = ns_condition_residuals(u1, u2);
  ns.report.deviations["p0_minus_p1"] = std::abs(p[0] - p[1]);
  ns.report.deviations["p0_plus_p2"] = std::abs(p[0] + p[2]);
  ns.report.deviations["success_probability"] = std::abs(ns.report.success_probability - ns_success_probability());
  ns.report.deviations["phase_condition_1"] = res[0];
  ns.report.deviations["phase_condition_2"] = res[1];
  ns.report.deviations["phase_condition_3"] = res[2];
  ns.report.deviations["angle_condition_1"] = res[3];
  ns.report.deviations["angle_condition_2"] = res[4];
  return ns;
}

UnitaryMatrix hadamard_bs() { return beam_splitter(BeamSplitterConfig::hadamard()); }

CircuitOp cz_circuit(int internal_modes, int mode_a, int mode_b) {
  if (mode_a == mode_b) throw std::invalid_argument("CZ needs two distinct modes");
  const std::vector<int> pair{mode_a, mode_b};
  const CircuitOp h(embed(hadamard_bs(), pair, internal_modes), internal_modes, 0, "hadamard");
  const NonlinearSign ns = nonlinear_sign();

  CircuitOp c = h;
  for (int mode : pair) {
    for (const LoopStage& s : ns.spec.stages) {
      c = temporal_compose(c, CircuitOp::loop_on_mode(s.config, internal_modes, mode));
    }
  }
  return temporal_compose(c, h);
}

namespace {

OccupationVector heralds(const NonlinearSign& ns, int repeats) {
  std::vector<int> v;
  for (int r = 0; r < repeats; ++r) {
    for (const LoopStage& s : ns.spec.stages) v.push_back(s.n_minus);
  }
  return OccupationVector(v);
}

OccupationVector measured(const NonlinearSign& ns, int repeats) {
  std::vector<int> v;
  for (int r = 0; r < repeats; ++r) {
    for (const LoopStage& s : ns.spec.stages) v.push_back(s.n_plus);
  }
  return OccupationVector(v);
}

Eigen::Matrix4cd block_action(const ProjectedBlock& block, const std::array<OccupationVector, 4>& basis) {
  Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) {
    const FockVector out = block.apply(FockVector::basis_state(basis[static_cast<std::size_t>(i)], 2));
    for (int j = 0; j < 4; ++j) a(i, j) = out.amplitude(basis[static_cast<std::size_t>(j)]);
  }
  return a;
}

double deviation_from_cz(const Eigen::Matrix4cd& a, double scale) {
  Eigen::Matrix4cd target = Eigen::Matrix4cd::Zero();
  target.diagonal() << scale, scale, scale, -scale;
  return (a - target).cwiseAbs().maxCoeff();
}

}  // namespace

ControlledZ controlled_z() {
  const NonlinearSign ns = nonlinear_sign();
  ControlledZ cz{cz_circuit(2, 0, 1), heralds(ns, 2), measured(ns, 2), Eigen::Matrix4cd::Zero(), {}};
  const ProjectedBlock block(cz.circuit, cz.prep, cz.meas);
  const std::array<OccupationVector, 4> basis{OccupationVector{0, 0}, OccupationVector{0, 1},
                                              OccupationVector{1, 0}, OccupationVector{1, 1}};
  cz.action = block_action(block, basis);

  const double scale = ns.report.success_probability;
  double success = 1.0;
  for (int i = 0; i < 4; ++i) {
    const FockVector out = block.apply(FockVector::basis_state(basis[static_cast<std::size_t>(i)], 2));
    success = std::min(success, out.norm2());
  }
  cz.report.gate = "cz";
  cz.report.success_probability = success;
  for (int i = 0; i < 4; ++i) cz.report.coefficients.push_back(cz.action(i, i));
  cz.report.deviations["action"] = deviation_from_cz(cz.action, scale);
  cz.report.deviations["success_probability"] = std::abs(success - cz_success_probability());
  cz.report.parameters["internal_modes"] = 2;
  cz.report.parameters["ancilla_time_bins"] = cz.circuit.external();
  for (const auto& [k, v] : ns.report.parameters) cz.report.parameters["ns." + k] = v;
  return cz;
}

DualRailCzCheck dual_rail_cz_check() {
  const NonlinearSign ns = nonlinear_sign();
  const CircuitOp c = cz_circuit(4, 0, 2);
  const ProjectedBlock block(c, heralds(ns, 2), measured(ns, 2));
  const std::array<OccupationVector, 4> basis{OccupationVector{0, 1, 0, 1}, OccupationVector{0, 1, 1, 0},
                                              OccupationVector{1, 0, 0, 1}, OccupationVector{1, 0, 1, 0}};
  DualRailCzCheck check;
  check.action = block_action(block, basis);
  check.scale = ns.report.success_probability;
  check.deviation = deviation_from_cz(check.action, check.scale);

  const double h = 1.0 / std::numbers::sqrt2;
  FockVector bell(4, 2);
  bell.add(basis[0], h);
  bell.add(basis[3], h);
  FockVector expected(4, 2);
  expected.add(basis[0], h);
  expected.add(basis[3], -h);
  const FockVector out = block.apply(bell);
  check.superposition_deviation =
      out.norm2() > 0.0 ? max_abs_difference(out.normalized(), expected) : 1.0;
  return check;
}

}  // namespace fockrail
