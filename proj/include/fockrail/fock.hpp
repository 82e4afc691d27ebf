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

#ifndef FOCKRAIL_FOCK_HPP_
#define FOCKRAIL_FOCK_HPP_

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockrail {

using Complex = std::complex<double>;

/// Absolute tolerance used by normalization and unitarity checks.
inline constexpr double kTolerance = 1e-9;

/// Photon counts per mode. Doubles as the computation-basis label of the
/// multimode Fock space.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts);

  static OccupationVector vacuum(int modes);

  int modes() const { return static_cast<int>(counts_.size()); }
  int total() const;
  int operator[](int mode) const { return counts_.at(static_cast<std::size_t>(mode)); }
  const std::vector<int>& counts() const { return counts_; }

  OccupationVector raised(int mode) const;
  OccupationVector lowered(int mode) const;

  /// Modes [first, first + count).
  OccupationVector slice(int first, int count) const;

  std::string str() const;

  auto operator<=>(const OccupationVector&) const = default;
  bool operator==(const OccupationVector&) const = default;

 private:
  std::vector<int> counts_;
};

OccupationVector concat(const OccupationVector& a, const OccupationVector& b);

/// All occupation vectors with a fixed mode count and photon total, in
/// lexicographically decreasing order: (2,0), (1,1), (0,2).
class FockSector {
 public:
  FockSector(int modes, int photons);

  int modes() const { return modes_; }
  int photons() const { return photons_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<OccupationVector>& basis() const { return basis_; }
  const OccupationVector& operator[](std::size_t i) const { return basis_[i]; }

  /// Position of `n` in the basis; throws std::out_of_range if absent.
  std::size_t index_of(const OccupationVector& n) const;

 private:
  int modes_;
  int photons_;
  std::vector<OccupationVector> basis_;
  std::map<OccupationVector, std::size_t> index_;
};

FockSector enumerate_sector(int modes, int photons);

/// C(photons + modes - 1, modes - 1), saturating at SIZE_MAX.
std::size_t sector_size(int modes, int photons);

/// Sparse state on a truncated multimode Fock space.
///
/// Amplitudes are keyed by occupation vector. Every key has the declared
/// mode count and a total photon number no larger than the truncation.
/// Operators that would push a component past the truncation drop it and
/// accumulate the dropped squared norm in truncation_loss().
class FockVector {
 public:
  FockVector(int modes, int truncation);

  static FockVector basis_state(const OccupationVector& n, int truncation = -1);
  static FockVector vacuum(int modes, int truncation = 0);

  int modes() const { return modes_; }
  int truncation() const { return truncation_; }
  double truncation_loss() const { return truncation_loss_; }
  bool overflowed() const { return truncation_loss_ > 0.0; }

  Complex amplitude(const OccupationVector& n) const;
  const std::map<OccupationVector, Complex>& amplitudes() const { return amplitudes_; }
  std::size_t nonzero_count() const { return amplitudes_.size(); }
  bool empty() const { return amplitudes_.empty(); }

  /// Accumulates into the component `n`. Components above the truncation are
  /// dropped and their weight recorded as truncation loss.
  void add(const OccupationVector& n, Complex amplitude);
  void record_loss(double mass) { truncation_loss_ += mass; }

  double norm2() const;

  /// True when norm2() is 1, or when norm2() plus the recorded truncation
  /// loss is 1, within `tol`.
  bool is_normalized(double tol = kTolerance) const;

  FockVector scaled(Complex factor) const;
  FockVector normalized() const;

  /// Squared norm carried by each photon-number sector.
  std::map<int, double> sector_weights() const;

  /// Restriction to one photon-number sector as a dense vector over
  /// FockSector(modes, photons).
  std::vector<Complex> sector_view(const FockSector& sector) const;

 private:
  int modes_;
  int truncation_;
  double truncation_loss_ = 0.0;
  std::map<OccupationVector, Complex> amplitudes_;
};

Complex inner(const FockVector& u, const FockVector& v);
FockVector operator+(const FockVector& u, const FockVector& v);

/// Tensor product on concatenated modes. Components whose total exceeds
/// `truncation` are dropped into the loss. A negative truncation means the
/// sum of the two truncations.
FockVector tensor(const FockVector& a, const FockVector& b, int truncation = -1);

double max_abs_difference(const FockVector& u, const FockVector& v);

FockVector create(const FockVector& state, int mode);
FockVector annihilate(const FockVector& state, int mode);

/// Expected photon count in `mode`. Throws std::invalid_argument for states
/// that are not normalized.
double number_expectation(const FockVector& state, int mode);

}  // namespace fockrail

#endif  // FOCKRAIL_FOCK_HPP_
