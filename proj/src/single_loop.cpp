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

#include "fockrail/single_loop.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace fockrail {

namespace {

constexpr int kTableSize = 21;

constexpr std::array<double, kTableSize> make_factorials() {
  std::array<double, kTableSize> t{};
  t[0] = 1.0;
  for (int i = 1; i < kTableSize; ++i) t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * i;
  return t;
}

constexpr std::array<double, kTableSize> kFactorials = make_factorials();

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n < kTableSize) {
    return kFactorials[static_cast<std::size_t>(n)] /
           (kFactorials[static_cast<std::size_t>(k)] * kFactorials[static_cast<std::size_t>(n - k)]);
  }
  return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("negative factorial");
  if (n < kTableSize) return kFactorials[static_cast<std::size_t>(n)];
  return std::exp(log_factorial(n));
}

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("negative factorial");
  if (n < kTableSize) return std::log(kFactorials[static_cast<std::size_t>(n)]);
  return std::lgamma(static_cast<double>(n) + 1.0);
}

Complex loop_phase(const LoopAmplitudeQuery& q) {
  const BeamSplitterConfig& c = q.config;
  const double angle = (q.m_minus + q.n_minus) * c.gamma - (q.m_minus - q.n_plus) * c.tau +
                       (q.n_minus - q.n_plus) * c.rho;
  return unit_phase(angle);
}

Complex loop_amplitude(const LoopAmplitudeQuery& q) {
  if (q.m_minus < 0 || q.n_minus < 0 || q.n_plus < 0) throw std::invalid_argument("negative photon count");
  const int mm = q.m_minus;
  const int nm = q.n_minus;
  const int np = q.n_plus;
  const int mp = q.m_plus();
  if (mp < 0) return 0.0;

  const Complex unit = unit_phase(q.config.theta);
  const double c = unit.real();
  const double s = unit.imag();

  // sqrt(n+! m+! / (m-! n-!)) in log space.
  const double prefactor =
      std::exp(0.5 * (log_factorial(np) + log_factorial(mp) - log_factorial(mm) - log_factorial(nm)));
  const double sign = (std::min(nm, mp) % 2) ? -1.0 : 1.0;
  const double powers = ipow(c, std::abs(mm - np)) * ipow(s, std::abs(nm - np));

  const int kappa = std::min(mm, np) + std::min(nm, np) - np;
  double sum = 0.0;
  for (int eta = 0; eta <= kappa; ++eta) {
    const double term = binomial(mm, std::min(mm, np) - eta) * binomial(nm, std::min(nm, np) - (kappa - eta)) *
                        ipow(c, 2 * eta) * ipow(s, 2 * (kappa - eta));
    sum += (eta % 2) ? -term : term;
  }
  return prefactor * sign * powers * sum * loop_phase(q);
}

LoopBlock loop_block(const BeamSplitterConfig& config, int n_minus, int n_plus, int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
  LoopBlock b;
  b.n_minus = n_minus;
  b.n_plus = n_plus;
  for (int m = 0; m <= m_max; ++m) {
    const LoopAmplitudeQuery q{config, m, n_minus, n_plus};
    const int mp = q.m_plus();
    b.m_plus.push_back(mp < 0 ? -1 : mp);
    b.amplitude.push_back(mp < 0 ? Complex{} : loop_amplitude(q));
  }
  return b;
}

Eigen::MatrixXcd loop_block_matrix(const BeamSplitterConfig& config, int n_minus, int n_plus, int m_max) {
  const LoopBlock b = loop_block(config, n_minus, n_plus, m_max);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(m_max + 1, m_max + 1);
  for (int i = 0; i <= m_max; ++i) {
    const int j = b.m_plus[static_cast<std::size_t>(i)];
    if (j >= 0 && j <= m_max) m(i, j) = b.amplitude[static_cast<std::size_t>(i)];
  }
  return m;
}

}  // namespace fockrail
