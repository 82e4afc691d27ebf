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

#include "fockrail/permanent.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fockrail {

Complex permanent(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("permanent needs a square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) + a(0, 1) * a(1, 0);
  if (n > 62) throw std::length_error("permanent too large for Gray-code enumeration");

  // perm(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij
  std::vector<Complex> row_sum(static_cast<std::size_t>(n), Complex{});
  Complex total{};
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << j;
    gray ^= bit;
    const double sign_col = (gray & bit) ? 1.0 : -1.0;
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) {
      row_sum[static_cast<std::size_t>(i)] += sign_col * a(i, j);
      prod *= row_sum[static_cast<std::size_t>(i)];
    }
    const int size = std::popcount(gray);
    total += ((size & 1) ? -1.0 : 1.0) * prod;
  }
  return (n & 1) ? -total : total;
}

Eigen::MatrixXcd repeated_submatrix(const Eigen::MatrixXcd& u, const OccupationVector& rows,
                                    const OccupationVector& cols) {
  if (rows.modes() != u.rows() || cols.modes() != u.cols()) {
    throw std::invalid_argument("occupation does not match matrix dimension");
  }
  const int n = rows.total();
  if (cols.total() != n) throw std::invalid_argument("row and column totals differ");
  std::vector<int> ri, ci;
  ri.reserve(static_cast<std::size_t>(n));
  ci.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < rows.modes(); ++m)
    for (int k = 0; k < rows[m]; ++k) ri.push_back(m);
  for (int m = 0; m < cols.modes(); ++m)
    for (int k = 0; k < cols[m]; ++k) ci.push_back(m);
  Eigen::MatrixXcd sub(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sub(i, j) = u(ri[static_cast<std::size_t>(i)], ci[static_cast<std::size_t>(j)]);
  return sub;
}

}  // namespace fockrail
