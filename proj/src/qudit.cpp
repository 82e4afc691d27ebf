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

#include "fockrail/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fockrail/random_unitary.hpp"

namespace fockrail {

namespace {

using LongComplex = std::complex<long double>;

void check_residue(int b, int d) {
  if (d < 2) throw std::invalid_argument("arity must be at least 2");
  if (b < 0 || b >= d) throw std::out_of_range("residue out of range");
}

// x^n / n! for real x >= 0 in log space.
double poisson_term(double x, int n) {
  if (n == 0) return 1.0;
  if (x == 0.0) return 0.0;
  return std::exp(n * std::log(x) - std::lgamma(n + 1.0));
}

// Residue-class sums of x^n/n! split at `truncation`: the part with
// n <= truncation and the tail beyond it.
struct ClassSums {
  std::vector<double> kept;
  std::vector<double> tail;
};

ClassSums class_sums(int d, double x, int truncation) {
  ClassSums s{std::vector<double>(static_cast<std::size_t>(d), 0.0), std::vector<double>(static_cast<std::size_t>(d), 0.0)};
  const int last = std::max(truncation, static_cast<int>(std::ceil(4.0 * x)) + 200);
  for (int n = 0; n <= last; ++n) {
    const double t = poisson_term(x, n);
    (n <= truncation ? s.kept : s.tail)[static_cast<std::size_t>(n % d)] += t;
  }
  return s;
}

}  // namespace

Complex exph(int b, int d, Complex theta) {
  check_residue(b, d);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const LongComplex th(theta.real(), theta.imag());
  LongComplex sum = 0.0L;
  for (int c = 0; c < d; ++c) {
    const long double w = two_pi * c / d;
    const LongComplex root = std::polar(1.0L, w);
    sum += std::exp(root * th - LongComplex(0.0L, w * b));
  }
  sum /= static_cast<long double>(d);
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

Complex exph_series(int b, int d, Complex theta, int terms) {
  check_residue(b, d);
  const LongComplex th(theta.real(), theta.imag());
  LongComplex term = 1.0L;
  LongComplex sum = 0.0L;
  for (int n = 0; n < terms; ++n) {
    if (n > 0) term *= th / static_cast<long double>(n);
    if (n % d == b) sum += term;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

int coherent_truncation(Complex alpha) {
  const double a = std::abs(alpha);
  return static_cast<int>(std::ceil(a * a + 10.0 * a + 20.0));
}

FockVector coherent_state(Complex alpha, int truncation) {
  if (truncation < 0) throw std::invalid_argument("negative truncation");
  const double a = std::abs(alpha);
  const double x = a * a;
  const double phase = std::arg(alpha);
  FockVector v(1, truncation);
  double tail = 0.0;
  const int last = std::max(truncation, static_cast<int>(std::ceil(4.0 * x)) + 200);
  for (int n = 0; n <= last; ++n) {
    const double weight = std::exp(-x) * poisson_term(x, n);
    if (n > truncation) {
      tail += weight;
      continue;
    }
    if (weight == 0.0) continue;
    v.add(OccupationVector{n}, std::polar(std::sqrt(weight), n * phase));
  }
  if (tail > kTailTolerance) throw TruncationError("coherent state tail exceeds tolerance; raise the truncation");
  v.record_loss(tail);
  return v;
}

OccupationVector DualRailEncoding::occupation(int bit) {
  if (bit != 0 && bit != 1) throw std::out_of_range("bit must be 0 or 1");
  return bit == 0 ? OccupationVector{0, 1} : OccupationVector{1, 0};
}

FockVector DualRailEncoding::represent(int bit) { return FockVector::basis_state(occupation(bit), 1); }

std::optional<int> DualRailEncoding::interpret(const OccupationVector& n) {
  if (n == OccupationVector{0, 1}) return 0;
  if (n == OccupationVector{1, 0}) return 1;
  return std::nullopt;
}

Eigen::MatrixXcd DualRailEncoding::isometry() {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(2, 2);
  r(0, 1) = 1.0;
  r(1, 0) = 1.0;
  return r;
}

ParityQuditEncoding ParityQuditEncoding::coherent(int d, Complex alpha, int truncation) {
  check_residue(0, d);
  if (alpha == Complex{}) throw std::invalid_argument("coherent parity encoding needs nonzero alpha");
  if (truncation < 0) truncation = coherent_truncation(alpha);
  const double a = std::abs(alpha);
  const ClassSums sums = class_sums(d, a * a, truncation);

  std::vector<Complex> amps(static_cast<std::size_t>(truncation) + 1);
  for (int n = 0; n <= truncation; ++n) {
    const std::size_t b = static_cast<std::size_t>(n % d);
    const double norm = sums.kept[b] + sums.tail[b];
    const double mag = std::sqrt(poisson_term(a * a, n) / norm);
    amps[static_cast<std::size_t>(n)] = std::polar(mag, n * std::arg(alpha));
  }
  std::vector<double> tails(static_cast<std::size_t>(d));
  for (std::size_t b = 0; b < tails.size(); ++b) tails[b] = sums.tail[b] / (sums.kept[b] + sums.tail[b]);
  return ParityQuditEncoding(d, std::move(amps), std::move(tails), alpha);
}

ParityQuditEncoding ParityQuditEncoding::from_sequence(int d, std::vector<Complex> amplitudes) {
  check_residue(0, d);
  if (amplitudes.size() < static_cast<std::size_t>(d)) throw std::invalid_argument("sequence shorter than arity");
  std::vector<double> norms(static_cast<std::size_t>(d), 0.0);
  for (std::size_t n = 0; n < amplitudes.size(); ++n) norms[n % static_cast<std::size_t>(d)] += std::norm(amplitudes[n]);
  for (double v : norms) {
    if (v == 0.0) throw std::invalid_argument("every residue class needs a nonzero amplitude");
  }
  for (std::size_t n = 0; n < amplitudes.size(); ++n) amplitudes[n] /= std::sqrt(norms[n % static_cast<std::size_t>(d)]);
  return ParityQuditEncoding(d, std::move(amplitudes), std::vector<double>(static_cast<std::size_t>(d), 0.0),
                             std::nullopt);
}

Complex ParityQuditEncoding::amplitude(int n) const {
  if (n < 0) throw std::out_of_range("negative photon count");
  if (n > truncation()) return 0.0;
  return amplitudes_[static_cast<std::size_t>(n)];
}

double ParityQuditEncoding::tail_mass(int b) const {
  check_residue(b, d_);
  return tails_[static_cast<std::size_t>(b)];
}

FockVector ParityQuditEncoding::represent(int b) const {
  if (tail_mass(b) > kTailTolerance) throw TruncationError("encoding tail exceeds tolerance; raise the truncation");
  FockVector v(1, truncation());
  for (int n = b; n <= truncation(); n += d_) v.add(OccupationVector{n}, amplitudes_[static_cast<std::size_t>(n)]);
  v.record_loss(tail_mass(b));
  return v;
}

std::pair<int, Complex> ParityQuditEncoding::interpret(int n) const { return {n % d_, std::conj(amplitude(n))}; }

Eigen::MatrixXcd ParityQuditEncoding::isometry() const {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(d_, truncation() + 1);
  for (int n = 0; n <= truncation(); ++n) r(n % d_, n) = amplitudes_[static_cast<std::size_t>(n)];
  return r;
}

std::vector<double> ParityQuditEncoding::mixing_weights() const {
  if (!alpha_) throw std::logic_error("mixing weights exist only for the coherent model");
  const double x = std::norm(*alpha_);
  const ClassSums sums = class_sums(d_, x, truncation());
  std::vector<double> p(static_cast<std::size_t>(d_));
  for (std::size_t b = 0; b < p.size(); ++b) p[b] = std::sqrt((sums.kept[b] + sums.tail[b]) * std::exp(-x));
  return p;
}

ImplementationBounds implement_bounds(const Eigen::MatrixXcd& r, const Eigen::MatrixXcd& p, int b_minus, int b_plus) {
  if (p.rows() != r.cols() || p.cols() != r.cols()) throw std::invalid_argument("physical map does not match isometry");
  if (b_minus < 0 || b_minus >= r.rows() || b_plus < 0 || b_plus >= r.rows()) {
    throw std::out_of_range("dit out of range");
  }
  const Eigen::Index size = p.rows();
  double mu = 0.0;
  double sum = 0.0;
#pragma omp parallel for reduction(+ : mu, sum) schedule(static)
  for (Eigen::Index i = 0; i < size; ++i) {
    const double ri = std::abs(r(b_minus, i));
    if (ri == 0.0) continue;
    for (Eigen::Index j = 0; j < size; ++j) {
      const double term = ri * std::abs(p(i, j)) * std::abs(r(b_plus, j));
      mu += term * term;
      sum += term;
    }
  }
  return {mu, std::max(0.0, sum * sum - mu)};
}

Eigen::MatrixXcd implemented_operator(const Eigen::MatrixXcd& r, const Eigen::MatrixXcd& p) {
  return r * p * r.adjoint();
}

FloorCapEstimate floor_cap_estimate(const Eigen::MatrixXcd& r, const Eigen::MatrixXcd& theory,
                                    const Eigen::MatrixXcd& physical, int samples, std::uint64_t seed) {
  const Eigen::MatrixXcd t = implemented_operator(r, physical);
  if (theory.rows() != t.rows() || theory.cols() != t.cols()) throw std::invalid_argument("theory map has wrong size");
  constexpr double kZero = 1e-20;
  FloorCapEstimate e;
  e.floor = std::numeric_limits<double>::infinity();
  e.cap = 0.0;
  auto consider = [&](Complex num, Complex den) {
    const double n2 = std::norm(num);
    const double d2 = std::norm(den);
    if (d2 < kZero) {
      if (n2 >= kZero) e.violated = true;
      return;
    }
    const double ratio = n2 / d2;
    e.floor = std::min(e.floor, ratio);
    e.cap = std::max(e.cap, ratio);
    ++e.compared;
  };
  const int d = static_cast<int>(theory.rows());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) consider(theory(i, j), t(i, j));
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXcd u = random_state(d, rng);
    const Eigen::VectorXcd v = random_state(d, rng);
    consider(u.dot(theory * v), u.dot(t * v));
  }
  if (e.compared == 0) e.floor = 0.0;
  return e;
}

}  // namespace fockrail
