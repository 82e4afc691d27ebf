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

#ifndef FOCKRAIL_SINGLE_LOOP_HPP_
#define FOCKRAIL_SINGLE_LOOP_HPP_

#include <Eigen/Dense>
#include <vector>

#include "fockrail/circuit.hpp"

namespace fockrail {

/// One time-bin of the single-loop computer: m_minus photons in the loop,
/// n_minus prepared on the input edge and n_plus measured on the output edge.
struct LoopAmplitudeQuery {
  BeamSplitterConfig config;
  int m_minus = 0;
  int n_minus = 0;
  int n_plus = 0;

  /// Photons left in the loop; negative outside the conservation cone.
  int m_plus() const { return m_minus + n_minus - n_plus; }
};

/// Closed-form <m- n-| B[U] |n+ m+> for the single-loop circuit. Zero
/// outside the conservation cone.
Complex loop_amplitude(const LoopAmplitudeQuery& q);

/// The pure phase e^{i((m-+n-)gamma - (m- - n+)tau + (n- - n+)rho)} that
/// carries all phase dependence of loop_amplitude.
Complex loop_phase(const LoopAmplitudeQuery& q);

/// Loop map for fixed external counts, tabulated for m- = 0..m_max. Each
/// internal basis state goes to a single state with m_plus[m-] photons
/// (-1 when annihilated).
struct LoopBlock {
  int n_minus = 0;
  int n_plus = 0;
  std::vector<int> m_plus;
  std::vector<Complex> amplitude;
};

LoopBlock loop_block(const BeamSplitterConfig& config, int n_minus, int n_plus, int m_max);

/// Dense (m_max + 1) x (m_max + 1) matrix of the loop map; entries whose
/// target exceeds m_max are dropped.
Eigen::MatrixXcd loop_block_matrix(const BeamSplitterConfig& config, int n_minus, int n_plus, int m_max);

/// n! as a double, exact through 22!.
double factorial(int n);

/// log(n!).
double log_factorial(int n);

}  // namespace fockrail

#endif  // FOCKRAIL_SINGLE_LOOP_HPP_
