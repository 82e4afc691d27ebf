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

#ifndef FOCKRAIL_PERMANENT_HPP_
#define FOCKRAIL_PERMANENT_HPP_

#include <Eigen/Dense>

#include "fockrail/fock.hpp"

namespace fockrail {

/// Permanent of a square complex matrix by Ryser's formula, visiting column
/// subsets in Gray-code order so each step updates the row sums with a
/// single column. O(2^n n). The empty matrix has permanent 1.
Complex permanent(const Eigen::MatrixXcd& a);

/// Submatrix of `u` with row i repeated rows[i] times and column j repeated
/// cols[j] times.
Eigen::MatrixXcd repeated_submatrix(const Eigen::MatrixXcd& u, const OccupationVector& rows,
                                    const OccupationVector& cols);

}  // namespace fockrail

#endif  // FOCKRAIL_PERMANENT_HPP_
