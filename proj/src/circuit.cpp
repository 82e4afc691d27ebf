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

#include "fockrail/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fockrail {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Exact (cos, sin) at integer multiples of the double nearest pi/2.
bool snapped_cos_sin(double angle, double& c, double& s) {
  const double q = std::nearbyint(angle / kHalfPi);
  if (std::abs(q) > 64.0 || q * kHalfPi != angle) return false;
  static constexpr double kCos[4] = {1.0, 0.0, -1.0, 0.0};
  static constexpr double kSin[4] = {0.0, 1.0, 0.0, -1.0};
  const int k = ((static_cast<int>(q) % 4) + 4) % 4;
  c = kCos[k];
  s = kSin[k];
  return true;
}

void cos_sin(double angle, double& c, double& s) {
  if (!snapped_cos_sin(angle, c, s)) {
    c = std::cos(angle);
    s = std::sin(angle);
  }
}

}  // namespace

BeamSplitterConfig BeamSplitterConfig::mirror() { return {kHalfPi, kHalfPi, kHalfPi, 0.0}; }
BeamSplitterConfig BeamSplitterConfig::window() { return {0.0, 0.0, 0.0, 0.0}; }
BeamSplitterConfig BeamSplitterConfig::hadamard() { return {std::numbers::pi / 4.0, 0.0, 0.0, 0.0}; }

double BeamSplitterConfig::transmittance() const {
  double c, s;
  cos_sin(theta, c, s);
  return c * c;
}

double BeamSplitterConfig::reflectance() const {
  double c, s;
  cos_sin(theta, c, s);
  return s * s;
}

Complex unit_phase(double angle) {
  double c, s;
  cos_sin(angle, c, s);
  return {c, s};
}

UnitaryMatrix beam_splitter(const BeamSplitterConfig& config) {
  double c, s;
  cos_sin(config.theta, c, s);
  const Complex g = unit_phase(config.gamma);
  Eigen::MatrixXcd m(2, 2);
  m(0, 0) = g * std::conj(unit_phase(config.rho)) * s;
  m(0, 1) = g * std::conj(unit_phase(config.tau)) * c;
  m(1, 0) = g * unit_phase(config.tau) * c;
  m(1, 1) = -g * unit_phase(config.rho) * s;
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int j = perm[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || seen[static_cast<std::size_t>(j)]) {
      throw std::invalid_argument("malformed permutation");
    }
    seen[static_cast<std::size_t>(j)] = true;
    m(i, j) = 1.0;
  }
  return UnitaryMatrix(std::move(m), UnitaryMatrix::Check::kSkip);
}

UnitaryMatrix embed(const UnitaryMatrix& u, std::span<const int> modes, int dim) {
  if (static_cast<int>(modes.size()) != u.dim()) throw DimensionError("embed: mode list does not match unitary");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  std::vector<bool> used(static_cast<std::size_t>(dim), false);
  for (int k : modes) {
    if (k < 0 || k >= dim || used[static_cast<std::size_t>(k)]) throw std::invalid_argument("embed: bad mode list");
    used[static_cast<std::size_t>(k)] = true;
    m(k, k) = 0.0;
  }
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < u.dim(); ++j) m(modes[static_cast<std::size_t>(i)], modes[static_cast<std::size_t>(j)]) = u(i, j);
  return UnitaryMatrix(std::move(m), UnitaryMatrix::Check::kSkip);
}

PartitionedUnitary::PartitionedUnitary(UnitaryMatrix matrix, int internal, int external)
    : matrix_(std::move(matrix)), internal_(internal), external_(external) {
  if (internal < 0 || external < 0 || internal + external != matrix_.dim()) {
    throw DimensionError("internal + external must equal the generator dimension");
  }
}

Eigen::MatrixXcd PartitionedUnitary::ie() const { return matrix_.matrix().block(0, 0, internal_, external_); }
Eigen::MatrixXcd PartitionedUnitary::ii() const { return matrix_.matrix().block(0, external_, internal_, internal_); }
Eigen::MatrixXcd PartitionedUnitary::ee() const { return matrix_.matrix().block(internal_, 0, external_, external_); }
Eigen::MatrixXcd PartitionedUnitary::ei() const {
  return matrix_.matrix().block(internal_, external_, external_, internal_);
}

CircuitOp::CircuitOp(PartitionedUnitary generator, std::vector<std::string> provenance)
    : generator_(std::move(generator)), provenance_(std::move(provenance)) {}

CircuitOp::CircuitOp(UnitaryMatrix matrix, int internal, int external, std::string label)
    : generator_(std::move(matrix), internal, external), provenance_{std::move(label)} {}

CircuitOp CircuitOp::loop(const BeamSplitterConfig& config) {
  return CircuitOp(beam_splitter(config), 1, 1, "loop");
}

CircuitOp CircuitOp::identity(int internal, int external) {
  return CircuitOp(UnitaryMatrix::identity(internal + external), internal, external, "identity");
}

CircuitOp CircuitOp::loop_on_mode(const BeamSplitterConfig& config, int internal, int mode) {
  if (mode < 0 || mode >= internal) throw std::out_of_range("loop mode out of range");
  const UnitaryMatrix bs = beam_splitter(config);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(internal + 1, internal + 1);
  for (int k = 0; k < internal; ++k) {
    if (k != mode) g(k, 1 + k) = 1.0;
  }
  g(mode, 0) = bs(0, 0);
  g(mode, 1 + mode) = bs(0, 1);
  g(internal, 0) = bs(1, 0);
  g(internal, 1 + mode) = bs(1, 1);
  return CircuitOp(UnitaryMatrix(std::move(g), UnitaryMatrix::Check::kSkip), internal, 1,
                   "loop@" + std::to_string(mode));
}

namespace {

std::vector<std::string> merged_provenance(const char* op, const CircuitOp& a, const CircuitOp& b) {
  std::vector<std::string> p;
  p.reserve(a.provenance().size() + b.provenance().size() + 1);
  p.insert(p.end(), a.provenance().begin(), a.provenance().end());
  p.insert(p.end(), b.provenance().begin(), b.provenance().end());
  p.push_back(std::string(op) + " M=" + std::to_string(a.internal()) + "," + std::to_string(b.internal()) +
              " N=" + std::to_string(a.external()) + "," + std::to_string(b.external()));
  return p;
}

}  // namespace

CircuitOp spatial_compose(const CircuitOp& c1, const CircuitOp& c2) {
  if (c1.external() != c2.external()) {
    throw CompositionError("spatial composition needs matching external systems (" +
                           std::to_string(c1.external()) + " vs " + std::to_string(c2.external()) + ")");
  }
  const int m1 = c1.internal();
  const int m2 = c2.internal();
  const int n = c1.external();
  const int dim = m1 + m2 + n;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(dim, dim);
  a.bottomRightCorner(m1 + n, m1 + n) = c1.matrix().matrix();
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(dim, dim);
  b.topLeftCorner(m2 + n, m2 + n) = c2.matrix().matrix();
  UnitaryMatrix g(a * b, UnitaryMatrix::Check::kSkip);
  return CircuitOp(PartitionedUnitary(std::move(g), m1 + m2, n), merged_provenance("spatial", c1, c2));
}

CircuitOp temporal_compose(const CircuitOp& c1, const CircuitOp& c2) {
  if (c1.internal() != c2.internal()) {
    throw CompositionError("temporal composition needs matching internal systems (" +
                           std::to_string(c1.internal()) + " vs " + std::to_string(c2.internal()) + ")");
  }
  const int m = c1.internal();
  const int n1 = c1.external();
  const int n2 = c2.external();
  const int dim = m + n1 + n2;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(dim, dim);
  a.topLeftCorner(m + n1, m + n1) = c1.matrix().matrix();
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(dim, dim);
  b.bottomRightCorner(m + n2, m + n2) = c2.matrix().matrix();
  UnitaryMatrix g(a * b, UnitaryMatrix::Check::kSkip);
  return CircuitOp(PartitionedUnitary(std::move(g), m, n1 + n2), merged_provenance("temporal", c1, c2));
}

double verify_interchange(const CircuitOp& c11, const CircuitOp& c21, const CircuitOp& c12,
                          const CircuitOp& c22) {
  const CircuitOp lhs = temporal_compose(spatial_compose(c11, c21), spatial_compose(c12, c22));
  const CircuitOp rhs = spatial_compose(temporal_compose(c11, c12), temporal_compose(c21, c22));
  if (lhs.internal() != rhs.internal() || lhs.external() != rhs.external()) {
    throw CompositionError("interchange sides have different partitions");
  }
  // Both sides already share the block order (internal (c2x, c1x), external
  // (cx1, cx2)), so no reordering is needed before comparing.
  return (lhs.matrix().matrix() - rhs.matrix().matrix()).cwiseAbs().maxCoeff();
}

}  // namespace fockrail
