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

#ifndef FOCKRAIL_FUNCTOR_HPP_
#define FOCKRAIL_FUNCTOR_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fockrail/fock.hpp"

namespace fockrail {

class NotUnitaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest sector basis the dense kernels will materialize.
inline constexpr std::size_t kMaxSectorBasis = 1'000'000;

/// Max row sum of |U U^dagger - I|.
double unitarity_defect(const Eigen::MatrixXcd& m);

/// Square complex matrix checked for unitarity at construction.
class UnitaryMatrix {
 public:
  enum class Check { kVerify, kSkip };

  explicit UnitaryMatrix(Eigen::MatrixXcd m, Check check = Check::kVerify, double tol = kTolerance);

  static UnitaryMatrix identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  UnitaryMatrix adjoint() const;

 private:
  Eigen::MatrixXcd m_;
};

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
UnitaryMatrix direct_sum(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// <in| B[U] |out>: the amplitude that the input occupation (rows of U) is
/// carried to the output occupation (columns of U). Equal to the permanent of
/// the row/column-repeated submatrix over sqrt(prod in! prod out!), and
/// exactly zero when the photon totals differ.
Complex matrix_element(const UnitaryMatrix& u, const OccupationVector& in, const OccupationVector& out);

/// Row <in| B[U] restricted to `sector` (which must carry in.total() photons).
/// OpenMP-parallel over the sector basis.
std::vector<Complex> transition_row(const UnitaryMatrix& u, const OccupationVector& in,
                                    const FockSector& sector);

/// Matrix of B[U] on the fixed-photon sector, entry (i, j) =
/// <basis_i| B[U] |basis_j>. OpenMP-parallel over rows.
Eigen::MatrixXcd sector_matrix(const UnitaryMatrix& u, int photons);

/// Single-threaded reference for sector_matrix.
Eigen::MatrixXcd sector_matrix_serial(const UnitaryMatrix& u, int photons);

/// Left action on a bra: amplitude(out) = sum_in amplitude(in) <in|B[U]|out>,
/// one sector at a time. Each sector either evaluates one permanent per
/// output basis state (OpenMP-parallel over outputs) or expands
/// prod_i (sum_j U_ij a_j^dagger)^{n_i} per input, skipping zero entries of
/// U (OpenMP-parallel over inputs). The path with the smaller work estimate
/// is taken; sectors above 12 photons always expand.
FockVector apply(const UnitaryMatrix& u, const FockVector& state);

/// Single-threaded reference for apply.
FockVector apply_serial(const UnitaryMatrix& u, const FockVector& state);

/// max |<n1 n2|B[U1 (+) U2]|m1 m2> - <n1|B[U1]|m1><n2|B[U2]|m2>| over all
/// sectors with at most `photon_cap` photons.
double direct_sum_check(const UnitaryMatrix& u1, const UnitaryMatrix& u2, int photon_cap);

/// max |S(U1 U2) - S(U1) S(U2)| over sector matrices with at most
/// `photon_cap` photons.
double product_check(const UnitaryMatrix& u1, const UnitaryMatrix& u2, int photon_cap);

}  // namespace fockrail

#endif  // FOCKRAIL_FUNCTOR_HPP_
