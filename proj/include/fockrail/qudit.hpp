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

#ifndef FOCKRAIL_QUDIT_HPP_
#define FOCKRAIL_QUDIT_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fockrail/fock.hpp"

namespace fockrail {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest tail mass a truncated encoding or coherent state may drop.
inline constexpr double kTailTolerance = 1e-9;

/// Residue-class partial sum of the exponential series,
///   exph_b^d[theta] = sum_{n mod d = b} theta^n / n!
///                   = (1/d) sum_c exp(w^c theta - 2 pi i b c / d),  w = e^{2 pi i/d}.
/// Evaluated through the d-term closed form.
Complex exph(int b, int d, Complex theta);

/// Direct summation of the first `terms` series terms.
Complex exph_series(int b, int d, Complex theta, int terms = 200);

/// Smallest truncation suggested for a coherent state: ceil(|a|^2 + 10|a| + 20).
int coherent_truncation(Complex alpha);

/// e^{-|a|^2/2} sum_n a^n/sqrt(n!) |n>, single mode, up to `truncation`
/// photons. Throws TruncationError when the dropped tail exceeds
/// kTailTolerance; the tail is recorded as truncation loss.
FockVector coherent_state(Complex alpha, int truncation);

/// Single-photon qubit: |0> -> |01>, |1> -> |10>.
class DualRailEncoding {
 public:
  static OccupationVector occupation(int bit);
  static FockVector represent(int bit);
  /// The bit carried by a basis state, or nothing outside the code space.
  static std::optional<int> interpret(const OccupationVector& n);
  /// 2 x 2 isometry from qubits to the one-photon sector of two modes, with
  /// columns in FockSector order ((1,0), (0,1)).
  static Eigen::MatrixXcd isometry();
};

/// Parity qudit: dit b is carried by the photon count of a single mode
/// modulo d, with amplitudes alpha_n on the residue class of b.
class ParityQuditEncoding {
 public:
  /// Coherent-tail model alpha_n = a^n / (sqrt(n!) sqrt(exph_b^d[|a|^2])).
  /// A negative truncation selects coherent_truncation(a).
  static ParityQuditEncoding coherent(int d, Complex alpha, int truncation = -1);

  /// Arbitrary amplitudes alpha_0..alpha_T; each residue class is rescaled
  /// to unit norm.
  static ParityQuditEncoding from_sequence(int d, std::vector<Complex> amplitudes);

  int arity() const { return d_; }
  int truncation() const { return static_cast<int>(amplitudes_.size()) - 1; }
  std::optional<Complex> alpha() const { return alpha_; }

  Complex amplitude(int n) const;

  /// 1 - (retained squared norm) of the representation of b.
  double tail_mass(int b) const;

  /// Truncated image of b. Throws TruncationError when the tail mass exceeds
  /// kTailTolerance.
  FockVector represent(int b) const;

  /// (n mod d, conj(alpha_n)).
  std::pair<int, Complex> interpret(int n) const;

  /// d x (T+1) matrix with entry (b, n) = alpha_n when n mod d = b.
  Eigen::MatrixXcd isometry() const;

  /// p[b] = sqrt(exph_b^d[|a|^2] / e^{|a|^2}); coherent model only.
  std::vector<double> mixing_weights() const;

 private:
  ParityQuditEncoding(int d, std::vector<Complex> amplitudes, std::vector<double> tails,
                      std::optional<Complex> alpha)
      : d_(d), amplitudes_(std::move(amplitudes)), tails_(std::move(tails)), alpha_(alpha) {}

  int d_;
  std::vector<Complex> amplitudes_;
  std::vector<double> tails_;
  std::optional<Complex> alpha_;
};

struct ImplementationBounds {
  double mu = 0.0;
  double epsilon = 0.0;
};

/// mu = sum |R(b-,n-)|^2 |P(n-,n+)|^2 |R(b+,n+)|^2 and
/// mu + eps = (sum |R(b-,n-)| |P(n-,n+)| |R(b+,n+)|)^2, with R the encoding
/// isometry and P the physical map on the same truncated basis.
ImplementationBounds implement_bounds(const Eigen::MatrixXcd& isometry, const Eigen::MatrixXcd& physical, int b_minus,
                                      int b_plus);

/// The theoretical map realized by a physical one: R P R^dagger.
Eigen::MatrixXcd implemented_operator(const Eigen::MatrixXcd& isometry, const Eigen::MatrixXcd& physical);

struct FloorCapEstimate {
  /// Smallest and largest observed |<u|U|v>|^2 / |<u|T|v>|^2.
  double floor = 0.0;
  double cap = 0.0;
  /// A zero implemented element faced a nonzero theoretical one.
  bool violated = false;
  /// Pairs with a nonzero ratio.
  int compared = 0;

  /// 0 < floor <= cap < inf, judged on samples only.
  bool equivalent() const { return !violated && (compared == 0 || (floor > 0.0 && floor <= cap)); }
};

/// Ratios over every basis pair plus `samples` Haar-random pairs of
/// single-register states. The sampled floor can only overestimate the true
/// floor and the sampled cap can only underestimate the true cap.
FloorCapEstimate floor_cap_estimate(const Eigen::MatrixXcd& isometry, const Eigen::MatrixXcd& theory,
                                    const Eigen::MatrixXcd& physical, int samples, std::uint64_t seed);

}  // namespace fockrail

#endif  // FOCKRAIL_QUDIT_HPP_
