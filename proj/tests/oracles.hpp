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

#ifndef FOCKRAIL_TESTS_ORACLES_HPP_
#define FOCKRAIL_TESTS_ORACLES_HPP_

// Reference computations that share no code with the library.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Poly = std::map<std::vector<int>, Complex>;

inline double fact(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Coefficients of prod_M (sum_L U(M,L) a_L)^{in_M} as a polynomial in the a_L.
inline Poly expand(const Eigen::MatrixXcd& u, const std::vector<int>& in) {
  const int dim = static_cast<int>(u.rows());
  Poly poly{{std::vector<int>(static_cast<std::size_t>(dim), 0), 1.0}};
  for (int m = 0; m < dim; ++m) {
    for (int k = 0; k < in[static_cast<std::size_t>(m)]; ++k) {
      Poly next;
      for (const auto& [mono, c] : poly) {
        for (int l = 0; l < dim; ++l) {
          std::vector<int> grown = mono;
          ++grown[static_cast<std::size_t>(l)];
          next[grown] += c * u(m, l);
        }
      }
      poly = std::move(next);
    }
  }
  return poly;
}

/// <in|B[U]|out> from the bracket expansion: coeff(out) sqrt(out!/in!).
inline Complex element(const Eigen::MatrixXcd& u, const std::vector<int>& in, const std::vector<int>& out) {
  const Poly poly = expand(u, in);
  auto it = poly.find(out);
  if (it == poly.end()) return 0.0;
  double in_f = 1.0;
  double out_f = 1.0;
  for (int c : in) in_f *= fact(c);
  for (int c : out) out_f *= fact(c);
  return it->second * std::sqrt(out_f / in_f);
}

/// Permanent by summing over all permutations.
inline Complex permanent(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Complex total = 0.0;
  do {
    Complex term = 1.0;
    for (int i = 0; i < n; ++i) term *= a(i, p[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return n == 0 ? Complex(1.0) : total;
}

/// All occupation vectors of `modes` modes holding `photons` photons.
inline std::vector<std::vector<int>> compositions(int modes, int photons) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(modes), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == modes - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  if (modes > 0) rec(rec, 0, photons);
  return out;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return fact(n) / (fact(k) * fact(n - k));
}

/// 2 x 2 beam splitter written out entry by entry.
inline Eigen::Matrix2cd beam_splitter(double theta, double gamma, double rho, double tau) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u << std::exp(i * (gamma - rho)) * std::sin(theta), std::exp(i * (gamma - tau)) * std::cos(theta),
      std::exp(i * (gamma + tau)) * std::cos(theta), -std::exp(i * (gamma + rho)) * std::sin(theta);
  return u;
}

}  // namespace oracle

#endif  // FOCKRAIL_TESTS_ORACLES_HPP_
